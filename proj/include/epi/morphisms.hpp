#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epi/words.hpp"

namespace epi {

enum class GeneratorKind { Psi, PsiBar, Exchange };

// One generator of the episturmian monoid:
//   psi(a):      a -> a, x -> ax for x != a
//   psi_bar(a):  a -> a, x -> xa for x != a
//   exchange(a,b): swaps a and b, fixes everything else
class Generator {
public:
    static Generator psi(char a) { return Generator(GeneratorKind::Psi, a, a); }
    static Generator psi_bar(char a) { return Generator(GeneratorKind::PsiBar, a, a); }
    static Generator exchange(char a, char b);

    GeneratorKind kind() const noexcept { return kind_; }
    char letter() const noexcept { return a_; }
    char other() const noexcept { return b_; }  // Exchange only

    std::string to_text() const;  // "a", "a~", or "a/b"

    friend bool operator==(const Generator&, const Generator&) = default;

private:
    Generator(GeneratorKind kind, char a, char b) : kind_(kind), a_(a), b_(b) {}

    GeneratorKind kind_;
    char a_;
    char b_;
};

// A composed episturmian morphism. The first generator is the outermost one:
// applying the spec to w folds the generators from last to first.
class MorphismSpec {
public:
    MorphismSpec() = default;
    explicit MorphismSpec(std::vector<Generator> generators) : generators_(std::move(generators)) {}

    // Whitespace-separated tokens: `a` = psi, `a~` = psi_bar, `a/b` = exchange.
    static MorphismSpec parse(std::string_view text);

    const std::vector<Generator>& generators() const noexcept { return generators_; }
    std::size_t size() const noexcept { return generators_.size(); }
    bool empty() const noexcept { return generators_.empty(); }

    std::string to_text() const;

private:
    std::vector<Generator> generators_;
};

// Control sequence for standard episturmian prefix generation. Spins select
// psi (0) or psi_bar (1) per letter; periodic directives repeat forever.
struct DirectiveWord {
    Word letters;
    std::vector<bool> spins;  // same length as letters
    bool periodic = false;

    DirectiveWord() = default;
    DirectiveWord(Word l, bool p) : letters(std::move(l)), spins(letters.size(), false), periodic(p) {}
    DirectiveWord(Word l, std::vector<bool> s, bool p);

    bool all_spins_zero() const noexcept;
};

// Directive text is a letter string with an optional trailing `*` marking
// periodic repetition; spin_bits is empty or a 0/1 string of equal length.
DirectiveWord make_directive(std::string_view text, std::string_view spin_bits = {});

// Incremental iterated palindromic closure. current() is always a palindrome;
// for each letter x that has occurred, the state remembers the length of the
// longest palindromic prefix of current() that is followed by x. Appending x
// then costs one suffix copy instead of a fresh closure scan.
class PalState {
public:
    PalState() { prefix_len_.fill(kNone); }

    void advance(char x);

    const std::string& current() const noexcept { return current_; }
    Word word() const { return Word(current_); }
    std::size_t size() const noexcept { return current_.size(); }

    // Length of the remembered palindromic prefix followed by x, if any.
    std::optional<std::size_t> prefix_before(char x) const noexcept;

private:
    static constexpr std::int64_t kNone = -1;
    std::string current_;
    std::array<std::int64_t, 256> prefix_len_{};
};

Word apply_generator(const Generator& g, const Word& w, const Alphabet& alphabet);
Word apply_morphism(const MorphismSpec& m, const Word& w, const Alphabet& alphabet);

// Given psi(a) and w, returns psi_bar(a)(w) after checking the conjugation
// identity psi_a(w) = a . psi_bar_a(w) . a^-1 on this input.
Word conjugacy_shift(const Generator& g, const Word& w, const Alphabet& alphabet);

// Iterated palindromic closure of the whole directive word.
Word pal(const Word& directive);

// Length-L prefix of the standard episturmian sequence directed by d.
Word standard_prefix(const DirectiveWord& d, std::size_t length);

// Unique u with psi_a(u) = w, when w decodes over {a} + {a x : x != a}.
Word inverse_psi(const Word& w, char a);

struct Peel {
    char letter;
    bool barred;  // false: w = psi(letter)(rest), true: w = psi_bar(letter)(rest)
    Word rest;
};

// Strips one morphism layer from w. Uses the strictly most frequent letter;
// a two-letter word xy decodes as psi_x(y). Returns nullopt when no layer
// can be removed (frequency tie, single-letter power, or decode failure).
std::optional<Peel> peel(const Word& w);

struct PeelDecomposition {
    MorphismSpec morphism;  // outermost first
    char base_letter;
};

// Repeated peeling down to a single letter: w = morphism(base_letter).
std::optional<PeelDecomposition> peel_to_letter(const Word& w);

}  // namespace epi
