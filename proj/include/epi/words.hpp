#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "epi/error.hpp"

namespace epi {

// A finite word over single-character symbols. Plain immutable value; the
// byte-wise comparison operators exist only so words can live in ordered
// containers. Order-sensitive operations (Lyndon minima) go through Alphabet,
// whose declaration order need not be ASCII order.
class Word {
public:
    Word() = default;
    explicit Word(std::string letters) : letters_(std::move(letters)) {}
    explicit Word(char letter) : letters_(1, letter) {}

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    char operator[](std::size_t i) const { return letters_[i]; }
    char front() const { return letters_.front(); }
    char back() const { return letters_.back(); }
    const std::string& str() const noexcept { return letters_; }

    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    friend Word operator+(const Word& a, const Word& b) { return Word(a.letters_ + b.letters_); }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::string letters_;
};

// Ordered alphabet of distinct printable ASCII symbols. The declaration order
// is the total order used by every lexicographic comparison.
class Alphabet {
public:
    explicit Alphabet(std::string_view symbols);

    // Distinct letters of w in ASCII order; the default alphabet of a word.
    static Alphabet letters_of(const Word& w);

    std::size_t size() const noexcept { return symbols_.size(); }
    char letter(std::size_t i) const;
    bool contains(char c) const noexcept;
    std::size_t index_of(char c) const;  // throws LetterNotInAlphabet
    const std::string& symbols() const noexcept { return symbols_; }

    bool contains_all(const Word& w) const noexcept;
    void require_all(const Word& w) const;  // throws LetterNotInAlphabet

    // Lexicographic comparison of words under the declaration order.
    bool less(const Word& u, const Word& v) const;

private:
    std::string symbols_;
    std::array<std::int16_t, 128> position_{};
};

// Per-letter occurrence counts, indexed by alphabet position.
struct ParikhVector {
    std::vector<std::uint64_t> counts;

    ParikhVector() = default;
    explicit ParikhVector(std::vector<std::uint64_t> c) : counts(std::move(c)) {}

    std::size_t size() const noexcept { return counts.size(); }
    std::uint64_t sum() const;  // throws ArithmeticOverflow on wraparound
    bool is_zero() const noexcept;
    // Index of the single 1-entry when the vector is a unit vector.
    std::optional<std::size_t> unit_index() const noexcept;

    friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
};

// Comma-separated non-negative integers, e.g. "5,10,16".
ParikhVector parse_parikh(std::string_view text);
std::string to_string(const ParikhVector& p);

Word reverse(const Word& w);
bool is_palindrome(const Word& w);

// The n rotations of w in rotation order; duplicates kept for non-primitive w.
std::vector<Word> conjugates(const Word& w);

bool is_primitive(const Word& w);

// Smallest rotation under the alphabet order. Defined for primitive words only.
Word lyndon_representative(const Word& w, const Alphabet& alphabet);
bool is_lyndon(const Word& w, const Alphabet& alphabet);

ParikhVector parikh(const Word& w, const Alphabet& alphabet);

// Smallest p >= 1 with w[i] == w[i+p] for all valid i, via the border relation.
std::size_t smallest_period(const Word& w);

// Prefix of w of length smallest_period(w).
Word fractional_root(const Word& w);

// Shortest palindrome having w as a prefix.
Word palindromic_closure(const Word& w);

// Any two equal-length factors differ by at most 1 in each letter's count.
bool is_balanced(const Word& w);

// All distinct factors of w of length <= max_len, including the empty word.
std::set<Word> factor_set(const Word& w, std::size_t max_len);

// Factors of length <= |w| of the whole conjugacy class of w, i.e. of w*w.
std::set<Word> class_factor_set(const Word& w);

bool is_factor(const Word& needle, const Word& haystack);

}  // namespace epi
