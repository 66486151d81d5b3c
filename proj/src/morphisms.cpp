#include "epi/morphisms.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace epi {

namespace {

std::optional<std::string> decode_psi(const std::string& s, char a) {
    // Image words of psi(a) are concatenations of "a" and "ax" (x != a):
    // every non-a letter must be preceded by a, and decoding is forced.
    std::string u;
    for (std::size_t i = 0; i < s.size();) {
        if (s[i] != a) return std::nullopt;
        if (i + 1 < s.size() && s[i + 1] != a) {
            u.push_back(s[i + 1]);
            i += 2;
        } else {
            u.push_back(a);
            i += 1;
        }
    }
    return u;
}

std::optional<std::string> decode_psi_bar(const std::string& s, char a) {
    // Image words of psi_bar(a) are concatenations of "a" and "xa" (x != a).
    std::string u;
    for (std::size_t i = 0; i < s.size();) {
        if (s[i] == a) {
            u.push_back(a);
            i += 1;
        } else {
            if (i + 1 >= s.size() || s[i + 1] != a) return std::nullopt;
            u.push_back(s[i]);
            i += 2;
        }
    }
    return u;
}

}  // namespace

Generator Generator::exchange(char a, char b) {
    if (a == b) raise(Errc::InvalidGenerator, "exchange letters must differ");
    return Generator(GeneratorKind::Exchange, a, b);
}

std::string Generator::to_text() const {
    switch (kind_) {
        case GeneratorKind::Psi: return std::string(1, a_);
        case GeneratorKind::PsiBar: return std::string(1, a_) + "~";
        case GeneratorKind::Exchange: return std::string(1, a_) + "/" + std::string(1, b_);
    }
    return {};
}

MorphismSpec MorphismSpec::parse(std::string_view text) {
    std::vector<Generator> gens;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        std::string_view token = text.substr(i, j - i);
        const auto plain = [](char c) { return c != '~' && c != '/'; };
        if (token.size() == 1 && plain(token[0])) {
            gens.push_back(Generator::psi(token[0]));
        } else if (token.size() == 2 && token[1] == '~' && plain(token[0])) {
            gens.push_back(Generator::psi_bar(token[0]));
        } else if (token.size() == 3 && token[1] == '/' && plain(token[0]) && plain(token[2])) {
            gens.push_back(Generator::exchange(token[0], token[2]));
        } else {
            raise(Errc::ParseError, "bad morphism token '" + std::string(token) +
                                        "' (expected `a`, `a~`, or `a/b`)");
        }
        i = j;
    }
    return MorphismSpec(std::move(gens));
}

std::string MorphismSpec::to_text() const {
    std::string out;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (i) out.push_back(' ');
        out += generators_[i].to_text();
    }
    return out;
}

DirectiveWord::DirectiveWord(Word l, std::vector<bool> s, bool p)
    : letters(std::move(l)), spins(std::move(s)), periodic(p) {
    if (spins.size() != letters.size())
        raise(Errc::SizeMismatch, "directive letters and spins must have equal length");
    if (periodic && letters.empty())
        raise(Errc::InvalidDirective, "periodic directive must be non-empty");
}

bool DirectiveWord::all_spins_zero() const noexcept {
    return std::none_of(spins.begin(), spins.end(), [](bool b) { return b; });
}

DirectiveWord make_directive(std::string_view text, std::string_view spin_bits) {
    bool periodic = false;
    if (!text.empty() && text.back() == '*') {
        periodic = true;
        text.remove_suffix(1);
    }
    if (periodic && text.empty()) raise(Errc::InvalidDirective, "periodic directive must be non-empty");
    std::vector<bool> spins(text.size(), false);
    if (!spin_bits.empty()) {
        if (spin_bits.size() != text.size())
            raise(Errc::SizeMismatch, "spin string length must match the directive length");
        for (std::size_t i = 0; i < spin_bits.size(); ++i) {
            if (spin_bits[i] != '0' && spin_bits[i] != '1')
                raise(Errc::ParseError, "spins must be a string of 0s and 1s");
            spins[i] = (spin_bits[i] == '1');
        }
    }
    return DirectiveWord(Word(std::string(text)), std::move(spins), periodic);
}

void PalState::advance(char x) {
    auto& slot = prefix_len_[static_cast<unsigned char>(x)];
    const std::size_t old_len = current_.size();
    if (slot == kNone) {
        // First occurrence of x in the directive: Pal(wx) = Pal(w) x Pal(w).
        std::string next;
        next.reserve(2 * old_len + 1);
        next += current_;
        next.push_back(x);
        next += current_;
        current_ = std::move(next);
    } else {
        // Pal(wx) = Pal(w) followed by Pal(w) minus its palindromic prefix
        // of length slot (the longest one followed by x).
        current_ += current_.substr(static_cast<std::size_t>(slot));
    }
    // The whole previous palindrome is now the longest palindromic prefix
    // followed by x.
    slot = static_cast<std::int64_t>(old_len);
}

std::optional<std::size_t> PalState::prefix_before(char x) const noexcept {
    const std::int64_t v = prefix_len_[static_cast<unsigned char>(x)];
    if (v == kNone) return std::nullopt;
    return static_cast<std::size_t>(v);
}

Word apply_generator(const Generator& g, const Word& w, const Alphabet& alphabet) {
    alphabet.index_of(g.letter());
    if (g.kind() == GeneratorKind::Exchange) alphabet.index_of(g.other());
    alphabet.require_all(w);

    std::string out;
    const char a = g.letter();
    switch (g.kind()) {
        case GeneratorKind::Psi:
            out.reserve(2 * w.size());
            for (char c : w) {
                if (c != a) out.push_back(a);
                out.push_back(c);
            }
            break;
        case GeneratorKind::PsiBar:
            out.reserve(2 * w.size());
            for (char c : w) {
                out.push_back(c);
                if (c != a) out.push_back(a);
            }
            break;
        case GeneratorKind::Exchange: {
            const char b = g.other();
            out.reserve(w.size());
            for (char c : w) out.push_back(c == a ? b : (c == b ? a : c));
            break;
        }
    }
    return Word(out);
}

Word apply_morphism(const MorphismSpec& m, const Word& w, const Alphabet& alphabet) {
    Word result = w;
    const auto& gens = m.generators();
    for (auto it = gens.rbegin(); it != gens.rend(); ++it)
        result = apply_generator(*it, result, alphabet);
    return result;
}

Word conjugacy_shift(const Generator& g, const Word& w, const Alphabet& alphabet) {
    if (g.kind() != GeneratorKind::Psi)
        raise(Errc::InvalidGenerator, "conjugacy_shift expects a psi generator");
    if (w.empty()) raise(Errc::EmptyWord, "conjugacy_shift of the empty word is undefined");
    const char a = g.letter();
    const Word left = apply_generator(g, w, alphabet);
    const Word shifted = apply_generator(Generator::psi_bar(a), w, alphabet);
    if (shifted.back() != a ||
        left.str() != std::string(1, a) + shifted.str().substr(0, shifted.size() - 1))
        throw std::logic_error("psi / psi_bar conjugation identity violated");
    return shifted;
}

Word pal(const Word& directive) {
    PalState state;
    for (char c : directive) state.advance(c);
    return state.word();
}

Word standard_prefix(const DirectiveWord& d, std::size_t length) {
    if (!d.all_spins_zero())
        raise(Errc::SpinNotSupported, "prefix generation is defined for spin-free directives only");
    PalState state;
    if (d.periodic) {
        const std::string& letters = d.letters.str();
        for (std::size_t i = 0; state.size() < length; ++i) state.advance(letters[i % letters.size()]);
    } else {
        for (char c : d.letters) {
            if (state.size() >= length) break;
            state.advance(c);
        }
        if (state.size() < length)
            raise(Errc::DirectiveExhausted,
                  "directive ends before the requested prefix length is reached");
    }
    return Word(state.current().substr(0, length));
}

Word inverse_psi(const Word& w, char a) {
    if (w.empty()) raise(Errc::EmptyWord, "cannot decode the empty word");
    auto u = decode_psi(w.str(), a);
    if (!u)
        raise(Errc::NotInImage, "word is not in the image of psi(" + std::string(1, a) + ")");
    return Word(*u);
}

std::optional<Peel> peel(const Word& w) {
    if (w.empty()) return std::nullopt;
    const std::string& s = w.str();
    if (std::all_of(s.begin(), s.end(), [&](char c) { return c == s[0]; })) return std::nullopt;
    if (s.size() == 2) return Peel{s[0], false, Word(s[1])};  // xy = psi_x(y)

    // Strictly most frequent letter; a tie means no decodable layer.
    std::array<std::size_t, 256> counts{};
    for (char c : s) ++counts[static_cast<unsigned char>(c)];
    std::size_t best = 0;
    char a = 0;
    bool tie = false;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] == 0) continue;
        if (counts[i] > best) {
            best = counts[i];
            a = static_cast<char>(i);
            tie = false;
        } else if (counts[i] == best) {
            tie = true;
        }
    }
    if (tie) return std::nullopt;

    if (auto u = decode_psi(s, a)) return Peel{a, false, Word(*u)};
    if (auto u = decode_psi_bar(s, a)) return Peel{a, true, Word(*u)};
    return std::nullopt;
}

std::optional<PeelDecomposition> peel_to_letter(const Word& w) {
    if (w.empty()) return std::nullopt;
    std::vector<Generator> gens;
    Word current = w;
    while (current.size() > 1) {
        auto layer = peel(current);
        if (!layer) return std::nullopt;
        gens.push_back(layer->barred ? Generator::psi_bar(layer->letter)
                                     : Generator::psi(layer->letter));
        current = layer->rest;
    }
    return PeelDecomposition{MorphismSpec(std::move(gens)), current[0]};
}

}  // namespace epi
