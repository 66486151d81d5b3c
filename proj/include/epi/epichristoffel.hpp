#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "epi/words.hpp"

namespace epi {

enum class RejectReason {
    NegativeEntry,
    SingleNonzeroEntryGreaterThanOne,
    ZeroVector,
};

inline const char* name(RejectReason r) noexcept {
    switch (r) {
        case RejectReason::NegativeEntry: return "negative-entry";
        case RejectReason::SingleNonzeroEntryGreaterThanOne:
            return "single-nonzero-entry-greater-than-one";
        case RejectReason::ZeroVector: return "zero-vector";
    }
    return "unknown";
}

// One application of the T operator: the maximal entry (smallest index on
// ties) absorbs minus the sum of all the others.
struct TStep {
    std::vector<std::int64_t> before;
    std::size_t max_index = 0;
    std::vector<std::int64_t> after;

    friend bool operator==(const TStep&, const TStep&) = default;
};

// Full iteration record. Accepts exactly when the tuple reaches a unit
// vector; the three reject shapes are a negative entry, a single surviving
// entry > 1 (which would loop forever), and the all-zero input.
struct TTrace {
    std::vector<TStep> steps;
    bool accepted = false;
    std::size_t final_letter = 0;          // meaningful iff accepted
    std::optional<RejectReason> reason;    // set iff rejected
};

// Certificate produced by the T construction.
struct EpichristoffelClass {
    ParikhVector parikh;
    std::vector<std::size_t> directive_letters;  // transition labels, outermost first
    std::size_t final_letter = 0;
    Word standard_word;        // psi fold over the labels applied to the final letter
    Word epichristoffel_word;  // Lyndon representative of standard_word
};

// Christoffel word of slope p/q: q letters `a`, p letters `b`, gcd(p,q) = 1.
Word christoffel(std::uint64_t p, std::uint64_t q);
Word christoffel(std::uint64_t p, std::uint64_t q, const Alphabet& alphabet);

TStep t_step(const ParikhVector& p);
TTrace t_test(const ParikhVector& p);

EpichristoffelClass build_class(const ParikhVector& p, const Alphabet& alphabet);

// Member of some epichristoffel class: a letter, or a conjugate of the word
// the T construction builds for its occurrence counts.
bool is_c_epichristoffel(const Word& w, const Alphabet& alphabet);

// The Lyndon member of its class.
bool is_epichristoffel(const Word& w, const Alphabet& alphabet);

}  // namespace epi
