#pragma once

#include <map>
#include <utility>
#include <vector>

#include "epi/epichristoffel.hpp"
#include "epi/morphisms.hpp"
#include "epi/words.hpp"

namespace epi {

// Evidence that every conjugate of `word` occurs in one episturmian prefix.
// sequence_prefix is the image under `morphism` of a standard episturmian
// prefix, and conjugate_positions records a verified offset per conjugate.
struct TheoremWitness {
    Word word;
    MorphismSpec morphism;
    Word sequence_prefix;
    std::map<Word, std::size_t> conjugate_positions;
};

// Breadth-first closure of the alphabet letters under all psi generators,
// one class per distinct Lyndon word, words of length <= max_len. psi_bar
// images are skipped: they only add conjugates of words already reached.
// Output is sorted by length, then by the alphabet order of the Lyndon word.
std::vector<EpichristoffelClass> enumerate_classes(const Alphabet& alphabet, std::size_t max_len);

// All splits w = u v with both parts palindromes. Both parts must be
// non-empty, except that a palindrome w also yields the split (w, epsilon).
std::vector<std::pair<Word, Word>> two_palindrome_decompositions(const Word& w);

// Whether class_factor_set(w) is closed under reversal.
bool check_reversal_closure(const Word& w);

// Builds an episturmian prefix containing every conjugate of w and verifies
// each occurrence. Requires w to be c-epichristoffel with |w| >= 2.
TheoremWitness conjugates_in_common_sequence(const Word& w, const Alphabet& alphabet);

// For w whose fractional root z is c-epichristoffel: returns a morphism f
// with f(base) = z and a standard episturmian prefix t containing enough
// copies of the base letter that f(t) contains w. Verified before returning.
std::pair<MorphismSpec, Word> factor_witness(const Word& w, const Alphabet& alphabet);

// All splits of w into two c-epichristoffel words (single letters count).
std::vector<std::pair<Word, Word>> decompose_two_c_epichristoffel(const Word& w,
                                                                  const Alphabet& alphabet);

// True iff no split of w has both parts epichristoffel (i.e. Lyndon class
// representatives). Requires w itself to be epichristoffel.
bool epichristoffel_never_two_epichristoffel(const Word& w, const Alphabet& alphabet);

}  // namespace epi
