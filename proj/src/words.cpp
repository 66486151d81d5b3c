#include "epi/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace epi {

namespace {

bool printable_symbol(char c) {
    return std::isgraph(static_cast<unsigned char>(c)) != 0;
}

}  // namespace

Alphabet::Alphabet(std::string_view symbols) {
    if (symbols.empty()) raise(Errc::InvalidAlphabet, "alphabet must contain at least one symbol");
    position_.fill(-1);
    for (char c : symbols) {
        if (!printable_symbol(c))
            raise(Errc::InvalidAlphabet, "symbols must be printable non-space ASCII characters");
        auto idx = static_cast<std::size_t>(static_cast<unsigned char>(c));
        if (position_[idx] >= 0) raise(Errc::InvalidAlphabet, std::string("duplicate symbol '") + c + "'");
        position_[idx] = static_cast<std::int16_t>(symbols_.size());
        symbols_.push_back(c);
    }
}

Alphabet Alphabet::letters_of(const Word& w) {
    std::string distinct;
    for (char c : w)
        if (distinct.find(c) == std::string::npos) distinct.push_back(c);
    std::sort(distinct.begin(), distinct.end());
    return Alphabet(distinct);
}

char Alphabet::letter(std::size_t i) const {
    if (i >= symbols_.size()) raise(Errc::LetterNotInAlphabet, "letter index out of range");
    return symbols_[i];
}

bool Alphabet::contains(char c) const noexcept {
    auto idx = static_cast<unsigned char>(c);
    return idx < position_.size() && position_[idx] >= 0;
}

std::size_t Alphabet::index_of(char c) const {
    if (!contains(c)) raise(Errc::LetterNotInAlphabet, std::string("letter '") + c + "' is not in the alphabet");
    return static_cast<std::size_t>(position_[static_cast<unsigned char>(c)]);
}

bool Alphabet::contains_all(const Word& w) const noexcept {
    return std::all_of(w.begin(), w.end(), [&](char c) { return contains(c); });
}

void Alphabet::require_all(const Word& w) const {
    for (char c : w) index_of(c);
}

bool Alphabet::less(const Word& u, const Word& v) const {
    const std::size_t n = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i] != v[i]) return index_of(u[i]) < index_of(v[i]);
    }
    return u.size() < v.size();
}

std::uint64_t ParikhVector::sum() const {
    std::uint64_t total = 0;
    for (std::uint64_t c : counts) {
        if (c > std::numeric_limits<std::uint64_t>::max() - total)
            raise(Errc::ArithmeticOverflow, "occurrence counts overflow 64 bits");
        total += c;
    }
    return total;
}

bool ParikhVector::is_zero() const noexcept {
    return std::all_of(counts.begin(), counts.end(), [](std::uint64_t c) { return c == 0; });
}

std::optional<std::size_t> ParikhVector::unit_index() const noexcept {
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] == 0) continue;
        if (counts[i] != 1 || found) return std::nullopt;
        found = i;
    }
    return found;
}

ParikhVector parse_parikh(std::string_view text) {
    std::vector<std::uint64_t> counts;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view token = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        std::uint64_t value = 0;
        const char* first = token.data();
        const char* last = token.data() + token.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last || token.empty())
            raise(Errc::ParseError, "expected comma-separated non-negative integers");
        counts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return ParikhVector(std::move(counts));
}

std::string to_string(const ParikhVector& p) {
    std::string out;
    for (std::size_t i = 0; i < p.counts.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(p.counts[i]);
    }
    return out;
}

Word reverse(const Word& w) {
    return Word(std::string(w.str().rbegin(), w.str().rend()));
}

bool is_palindrome(const Word& w) {
    const std::string& s = w.str();
    for (std::size_t i = 0, j = s.size(); i + 1 < j; ++i, --j)
        if (s[i] != s[j - 1]) return false;
    return true;
}

std::vector<Word> conjugates(const Word& w) {
    if (w.empty()) raise(Errc::EmptyWord, "conjugates of the empty word are undefined");
    const std::string& s = w.str();
    std::vector<Word> out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        out.emplace_back(s.substr(i) + s.substr(0, i));
    return out;
}

std::size_t smallest_period(const Word& w) {
    if (w.empty()) raise(Errc::EmptyWord, "period of the empty word is undefined");
    const std::string& s = w.str();
    const std::size_t n = s.size();
    // Longest proper border via the prefix function; period = n - border.
    std::vector<std::size_t> border(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t k = border[i - 1];
        while (k > 0 && s[i] != s[k]) k = border[k - 1];
        if (s[i] == s[k]) ++k;
        border[i] = k;
    }
    return n - border[n - 1];
}

bool is_primitive(const Word& w) {
    const std::size_t p = smallest_period(w);
    const std::size_t n = w.size();
    return !(p < n && n % p == 0);
}

Word lyndon_representative(const Word& w, const Alphabet& alphabet) {
    if (w.empty()) raise(Errc::EmptyWord, "Lyndon representative of the empty word is undefined");
    alphabet.require_all(w);
    if (!is_primitive(w)) raise(Errc::NonPrimitive, "only primitive words have a Lyndon representative");
    std::vector<Word> rots = conjugates(w);
    const Word* best = &rots.front();
    for (const Word& r : rots)
        if (alphabet.less(r, *best)) best = &r;
    return *best;
}

bool is_lyndon(const Word& w, const Alphabet& alphabet) {
    if (w.empty()) raise(Errc::EmptyWord, "the empty word is not Lyndon");
    if (!is_primitive(w)) return false;
    return w == lyndon_representative(w, alphabet);
}

ParikhVector parikh(const Word& w, const Alphabet& alphabet) {
    std::vector<std::uint64_t> counts(alphabet.size(), 0);
    for (char c : w) ++counts[alphabet.index_of(c)];
    return ParikhVector(std::move(counts));
}

Word fractional_root(const Word& w) {
    return Word(w.str().substr(0, smallest_period(w)));
}

Word palindromic_closure(const Word& w) {
    const std::string& s = w.str();
    const std::size_t n = s.size();
    // Find the longest palindromic suffix; mirror everything before it.
    std::size_t start = 0;
    for (; start < n; ++start) {
        bool pal = true;
        for (std::size_t i = start, j = n; i + 1 < j; ++i, --j)
            if (s[i] != s[j - 1]) {
                pal = false;
                break;
            }
        if (pal) break;
    }
    std::string out = s;
    out.append(s.rend() - static_cast<std::ptrdiff_t>(start), s.rend());
    return Word(out);
}

bool is_balanced(const Word& w) {
    const std::string& s = w.str();
    const std::size_t n = s.size();
    std::string letters;
    for (char c : s)
        if (letters.find(c) == std::string::npos) letters.push_back(c);
    for (char c : letters) {
        for (std::size_t m = 1; m <= n; ++m) {
            std::size_t count = 0;
            for (std::size_t i = 0; i < m; ++i) count += (s[i] == c);
            std::size_t lo = count, hi = count;
            for (std::size_t i = m; i < n; ++i) {
                count += (s[i] == c);
                count -= (s[i - m] == c);
                lo = std::min(lo, count);
                hi = std::max(hi, count);
            }
            if (hi - lo > 1) return false;
        }
    }
    return true;
}

std::set<Word> factor_set(const Word& w, std::size_t max_len) {
    std::set<Word> out;
    out.insert(Word{});
    const std::string& s = w.str();
    for (std::size_t len = 1; len <= std::min(max_len, s.size()); ++len)
        for (std::size_t i = 0; i + len <= s.size(); ++i)
            out.insert(Word(s.substr(i, len)));
    return out;
}

std::set<Word> class_factor_set(const Word& w) {
    return factor_set(w + w, w.size());
}

bool is_factor(const Word& needle, const Word& haystack) {
    return haystack.str().find(needle.str()) != std::string::npos;
}

}  // namespace epi
