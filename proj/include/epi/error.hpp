#pragma once

#include <stdexcept>
#include <string>

namespace epi {

// Failure codes for all domain operations. Every failure is reported through
// Error so callers can branch on the code instead of parsing messages.
enum class Errc {
    EmptyWord,
    NonPrimitive,
    LetterNotInAlphabet,
    InvalidAlphabet,
    InvalidGenerator,
    InvalidDirective,
    NotInImage,
    DirectiveExhausted,
    SpinNotSupported,
    NotCoprime,
    ZeroVector,
    ArithmeticOverflow,
    NotEpichristoffelVector,
    NotCEpichristoffel,
    NotEpichristoffel,
    RootNotCEpichristoffel,
    SizeMismatch,
    ParseError,
};

inline const char* name(Errc c) noexcept {
    switch (c) {
        case Errc::EmptyWord: return "empty-word";
        case Errc::NonPrimitive: return "non-primitive";
        case Errc::LetterNotInAlphabet: return "letter-not-in-alphabet";
        case Errc::InvalidAlphabet: return "invalid-alphabet";
        case Errc::InvalidGenerator: return "invalid-generator";
        case Errc::InvalidDirective: return "invalid-directive";
        case Errc::NotInImage: return "not-in-image";
        case Errc::DirectiveExhausted: return "directive-exhausted";
        case Errc::SpinNotSupported: return "spin-not-supported";
        case Errc::NotCoprime: return "not-coprime";
        case Errc::ZeroVector: return "zero-vector";
        case Errc::ArithmeticOverflow: return "arithmetic-overflow";
        case Errc::NotEpichristoffelVector: return "not-epichristoffel-vector";
        case Errc::NotCEpichristoffel: return "not-c-epichristoffel";
        case Errc::NotEpichristoffel: return "not-epichristoffel";
        case Errc::RootNotCEpichristoffel: return "root-not-c-epichristoffel";
        case Errc::SizeMismatch: return "size-mismatch";
        case Errc::ParseError: return "parse-error";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace epi
