#pragma once

#include <json.hpp>

#include "epi/epichristoffel.hpp"
#include "epi/oracles.hpp"

namespace epi {

// Stable JSON shapes used by the CLI and frozen by the golden tests.

// {"steps":[{"before":[...],"index":i,"after":[...]},...],
//  "verdict":"accept","final_letter":"c"}  or
//  "verdict":"reject","reason":"negative-entry"}
nlohmann::json to_json(const TTrace& trace, const Alphabet& alphabet);

// {"parikh":[...],"labels":"cbabbbb","final":"c","standard":"...","lyndon":"..."}
nlohmann::json to_json(const EpichristoffelClass& cls, const Alphabet& alphabet);

// {"word":"...","morphism":"a b a","prefix":"...","conjugates":{"...":offset}}
nlohmann::json to_json(const TheoremWitness& witness);

}  // namespace epi
