#include "epi/epichristoffel.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "epi/morphisms.hpp"

namespace epi {

namespace {

// All intermediate tuples have |entry| <= sum of the input, so checking the
// input sum once keeps every later subtraction inside int64 range.
void require_in_range(const ParikhVector& p) {
    if (p.sum() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        raise(Errc::ArithmeticOverflow, "occurrence counts exceed the supported integer width");
}

std::size_t argmax_smallest_index(const std::vector<std::int64_t>& v) {
    std::size_t idx = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[idx]) idx = i;
    return idx;
}

TStep step_of(const std::vector<std::int64_t>& tuple) {
    TStep step;
    step.before = tuple;
    step.max_index = argmax_smallest_index(tuple);
    std::int64_t others = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i)
        if (i != step.max_index) others += tuple[i];
    step.after = tuple;
    step.after[step.max_index] = tuple[step.max_index] - others;
    return step;
}

std::optional<std::size_t> single_nonzero_index(const std::vector<std::int64_t>& v) {
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (found) return std::nullopt;
        found = i;
    }
    return found;
}

}  // namespace

Word christoffel(std::uint64_t p, std::uint64_t q) {
    return christoffel(p, q, Alphabet("ab"));
}

Word christoffel(std::uint64_t p, std::uint64_t q, const Alphabet& alphabet) {
    if (alphabet.size() < 2)
        raise(Errc::InvalidAlphabet, "Christoffel words need at least two letters");
    if (p == 0 || q == 0 || std::gcd(p, q) != 1)
        raise(Errc::NotCoprime, "p and q must be positive coprime integers");
    if (p > std::numeric_limits<std::uint64_t>::max() - q)
        raise(Errc::ArithmeticOverflow, "p + q overflows 64 bits");

    const std::uint64_t n = p + q;
    const char a = alphabet.letter(0);
    const char b = alphabet.letter(1);
    std::string out;
    out.reserve(static_cast<std::size_t>(n));
    std::uint64_t prev = 0;  // (i-1)*p mod n
    for (std::uint64_t i = 1; i <= n; ++i) {
        const std::uint64_t cur =
            static_cast<std::uint64_t>(static_cast<unsigned __int128>(i) * p % n);
        out.push_back(cur > prev ? a : b);
        prev = cur;
    }
    return Word(out);
}

TStep t_step(const ParikhVector& p) {
    if (p.is_zero()) raise(Errc::ZeroVector, "T is undefined on the zero vector");
    require_in_range(p);
    std::vector<std::int64_t> tuple(p.counts.begin(), p.counts.end());
    return step_of(tuple);
}

TTrace t_test(const ParikhVector& p) {
    TTrace trace;
    if (p.is_zero()) {
        trace.reason = RejectReason::ZeroVector;
        return trace;
    }
    require_in_range(p);
    std::vector<std::int64_t> tuple(p.counts.begin(), p.counts.end());
    for (;;) {
        if (auto idx = single_nonzero_index(tuple)) {
            if (tuple[*idx] == 1) {
                trace.accepted = true;
                trace.final_letter = *idx;
            } else {
                trace.reason = RejectReason::SingleNonzeroEntryGreaterThanOne;
            }
            return trace;
        }
        TStep step = step_of(tuple);
        trace.steps.push_back(step);
        if (step.after[step.max_index] < 0) {
            trace.reason = RejectReason::NegativeEntry;
            return trace;
        }
        tuple = std::move(step.after);
        // Each pass replaces the total by the previous maximal entry, which is
        // strictly smaller here since at least two entries are nonzero.
    }
}

EpichristoffelClass build_class(const ParikhVector& p, const Alphabet& alphabet) {
    if (p.size() != alphabet.size())
        raise(Errc::SizeMismatch, "vector arity must match the alphabet size");
    TTrace trace = t_test(p);
    if (!trace.accepted)
        raise(Errc::NotEpichristoffelVector,
              "no epichristoffel word has these occurrence counts (" +
                  std::string(name(*trace.reason)) + ")");

    EpichristoffelClass cls;
    cls.parikh = p;
    cls.final_letter = trace.final_letter;
    std::vector<Generator> gens;
    gens.reserve(trace.steps.size());
    for (const TStep& step : trace.steps) {
        cls.directive_letters.push_back(step.max_index);
        gens.push_back(Generator::psi(alphabet.letter(step.max_index)));
    }
    cls.standard_word =
        apply_morphism(MorphismSpec(std::move(gens)), Word(alphabet.letter(cls.final_letter)), alphabet);
    if (parikh(cls.standard_word, alphabet) != p)
        throw std::logic_error("constructed word does not realize the requested counts");
    cls.epichristoffel_word = lyndon_representative(cls.standard_word, alphabet);
    return cls;
}

bool is_c_epichristoffel(const Word& w, const Alphabet& alphabet) {
    if (w.empty()) raise(Errc::EmptyWord, "classification of the empty word is undefined");
    alphabet.require_all(w);
    if (w.size() == 1) return true;
    if (!is_primitive(w)) return false;
    const ParikhVector counts = parikh(w, alphabet);
    if (!t_test(counts).accepted) return false;
    // One class per occurrence vector, so membership reduces to conjugacy
    // with the constructed word.
    const EpichristoffelClass cls = build_class(counts, alphabet);
    const auto rotations = conjugates(cls.standard_word);
    return std::find(rotations.begin(), rotations.end(), w) != rotations.end();
}

bool is_epichristoffel(const Word& w, const Alphabet& alphabet) {
    if (!is_c_epichristoffel(w, alphabet)) return false;
    return w.size() == 1 || w == lyndon_representative(w, alphabet);
}

}  // namespace epi
