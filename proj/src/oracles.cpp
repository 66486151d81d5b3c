#include "epi/oracles.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace epi {

namespace {

char first_other_letter(const Alphabet& alphabet, char avoid) {
    for (char c : alphabet.symbols())
        if (c != avoid) return c;
    return avoid;  // single-letter alphabet
}

}  // namespace

std::vector<EpichristoffelClass> enumerate_classes(const Alphabet& alphabet, std::size_t max_len) {
    struct Item {
        Word word;
        std::vector<std::size_t> labels;  // outermost first
        std::size_t base_letter;
    };

    std::vector<EpichristoffelClass> out;
    if (max_len == 0) return out;

    std::deque<Item> queue;
    std::unordered_set<std::string> visited;
    std::map<Word, bool> seen_lyndon;

    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        Word letter(alphabet.letter(i));
        queue.push_back(Item{letter, {}, i});
        visited.insert(letter.str());
    }

    while (!queue.empty()) {
        Item item = std::move(queue.front());
        queue.pop_front();

        Word lyndon = lyndon_representative(item.word, alphabet);
        if (!seen_lyndon.count(lyndon)) {
            seen_lyndon.emplace(lyndon, true);
            EpichristoffelClass cls;
            cls.parikh = parikh(item.word, alphabet);
            cls.directive_letters = item.labels;
            cls.final_letter = item.base_letter;
            cls.standard_word = item.word;
            cls.epichristoffel_word = std::move(lyndon);
            out.push_back(std::move(cls));
        }

        for (std::size_t g = 0; g < alphabet.size(); ++g) {
            const char a = alphabet.letter(g);
            std::size_t count_a = 0;
            for (char c : item.word)
                count_a += (c == a);
            if (2 * item.word.size() - count_a > max_len) continue;
            Word image = apply_generator(Generator::psi(a), item.word, alphabet);
            if (!visited.insert(image.str()).second) continue;
            std::vector<std::size_t> labels;
            labels.reserve(item.labels.size() + 1);
            labels.push_back(g);
            labels.insert(labels.end(), item.labels.begin(), item.labels.end());
            queue.push_back(Item{std::move(image), std::move(labels), item.base_letter});
        }
    }

    std::sort(out.begin(), out.end(), [&](const EpichristoffelClass& x, const EpichristoffelClass& y) {
        if (x.epichristoffel_word.size() != y.epichristoffel_word.size())
            return x.epichristoffel_word.size() < y.epichristoffel_word.size();
        return alphabet.less(x.epichristoffel_word, y.epichristoffel_word);
    });
    return out;
}

std::vector<std::pair<Word, Word>> two_palindrome_decompositions(const Word& w) {
    std::vector<std::pair<Word, Word>> out;
    const std::string& s = w.str();
    for (std::size_t i = 1; i < s.size(); ++i) {
        Word left(s.substr(0, i));
        Word right(s.substr(i));
        if (is_palindrome(left) && is_palindrome(right)) out.emplace_back(left, right);
    }
    if (!w.empty() && is_palindrome(w)) out.emplace_back(w, Word{});
    return out;
}

bool check_reversal_closure(const Word& w) {
    const std::set<Word> factors = class_factor_set(w);
    for (const Word& f : factors)
        if (!factors.count(reverse(f))) return false;
    return true;
}

TheoremWitness conjugates_in_common_sequence(const Word& w, const Alphabet& alphabet) {
    if (w.size() < 2 || !is_c_epichristoffel(w, alphabet))
        raise(Errc::NotCEpichristoffel, "witness construction needs a c-epichristoffel word of length >= 2");

    const EpichristoffelClass cls = build_class(parikh(w, alphabet), alphabet);
    std::vector<Generator> gens;
    for (std::size_t idx : cls.directive_letters) gens.push_back(Generator::psi(alphabet.letter(idx)));
    MorphismSpec f(std::move(gens));

    // A directive starting alpha alpha makes the generated sequence start
    // with a square of the image of alpha, and a square of a word contains
    // every conjugate of it.
    const char alpha = alphabet.letter(cls.final_letter);
    const char beta = first_other_letter(alphabet, alpha);
    const DirectiveWord directive(Word(std::string{alpha, alpha, beta}), true);

    const std::size_t target = 2 * w.size() + cls.standard_word.size();
    Word image;
    for (std::size_t len = 2;; ++len) {
        image = apply_morphism(f, standard_prefix(directive, len), alphabet);
        if (image.size() >= target) break;
    }

    TheoremWitness witness;
    witness.word = w;
    witness.morphism = std::move(f);
    witness.sequence_prefix = image;
    for (const Word& rot : conjugates(w)) {
        const std::size_t pos = image.str().find(rot.str());
        if (pos == std::string::npos)
            throw std::logic_error("conjugate missing from the constructed prefix");
        witness.conjugate_positions.emplace(rot, pos);
    }
    return witness;
}

std::pair<MorphismSpec, Word> factor_witness(const Word& w, const Alphabet& alphabet) {
    const Word root = fractional_root(w);
    if (!is_c_epichristoffel(root, alphabet))
        raise(Errc::RootNotCEpichristoffel, "the fractional root is not c-epichristoffel");

    auto decomposition = peel_to_letter(root);
    if (!decomposition)
        throw std::logic_error("c-epichristoffel root failed to peel to a letter");
    const char alpha = decomposition->base_letter;

    // w is a prefix of root^ceil(|w|/|root|), so a prefix containing that many
    // alphas maps onto a word containing w.
    const std::size_t copies = (w.size() + root.size() - 1) / root.size();
    std::string letters(copies, alpha);
    const char beta = first_other_letter(alphabet, alpha);
    if (beta != alpha) letters.push_back(beta);
    const DirectiveWord directive(Word(std::move(letters)), true);

    Word prefix;
    Word image;
    for (std::size_t len = copies;; ++len) {
        prefix = standard_prefix(directive, len);
        image = apply_morphism(decomposition->morphism, prefix, alphabet);
        if (image.size() >= copies * root.size()) break;
    }
    if (!is_factor(Word(std::string(copies, alpha)), prefix) || !is_factor(w, image))
        throw std::logic_error("constructed prefix does not contain the requested factor");
    return {std::move(decomposition->morphism), std::move(prefix)};
}

std::vector<std::pair<Word, Word>> decompose_two_c_epichristoffel(const Word& w,
                                                                  const Alphabet& alphabet) {
    if (!is_c_epichristoffel(w, alphabet))
        raise(Errc::NotCEpichristoffel, "only c-epichristoffel words decompose this way");
    std::vector<std::pair<Word, Word>> out;
    const std::string& s = w.str();
    for (std::size_t i = 1; i < s.size(); ++i) {
        Word left(s.substr(0, i));
        Word right(s.substr(i));
        if (is_c_epichristoffel(left, alphabet) && is_c_epichristoffel(right, alphabet))
            out.emplace_back(left, right);
    }
    return out;
}

bool epichristoffel_never_two_epichristoffel(const Word& w, const Alphabet& alphabet) {
    if (!is_epichristoffel(w, alphabet))
        raise(Errc::NotEpichristoffel, "word is not an epichristoffel (Lyndon) representative");
    const std::string& s = w.str();
    for (std::size_t i = 1; i < s.size(); ++i) {
        Word left(s.substr(0, i));
        Word right(s.substr(i));
        if (is_epichristoffel(left, alphabet) && is_epichristoffel(right, alphabet)) return false;
    }
    return true;
}

}  // namespace epi
