#include "epi/json.hpp"

namespace epi {

using nlohmann::json;

json to_json(const TTrace& trace, const Alphabet& alphabet) {
    json steps = json::array();
    for (const TStep& step : trace.steps) {
        steps.push_back({{"before", step.before},
                         {"index", step.max_index},
                         {"letter", std::string(1, alphabet.letter(step.max_index))},
                         {"after", step.after}});
    }
    json out{{"steps", std::move(steps)}};
    if (trace.accepted) {
        out["verdict"] = "accept";
        out["final_letter"] = std::string(1, alphabet.letter(trace.final_letter));
    } else {
        out["verdict"] = "reject";
        out["reason"] = name(*trace.reason);
    }
    return out;
}

json to_json(const EpichristoffelClass& cls, const Alphabet& alphabet) {
    std::string labels;
    for (std::size_t idx : cls.directive_letters) labels.push_back(alphabet.letter(idx));
    return json{{"parikh", cls.parikh.counts},
                {"labels", labels},
                {"final", std::string(1, alphabet.letter(cls.final_letter))},
                {"standard", cls.standard_word.str()},
                {"lyndon", cls.epichristoffel_word.str()}};
}

json to_json(const TheoremWitness& witness) {
    json offsets = json::object();
    for (const auto& [conjugate, pos] : witness.conjugate_positions)
        offsets[conjugate.str()] = pos;
    return json{{"word", witness.word.str()},
                {"morphism", witness.morphism.to_text()},
                {"prefix", witness.sequence_prefix.str()},
                {"conjugates", std::move(offsets)}};
}

}  // namespace epi
