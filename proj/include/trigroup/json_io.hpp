#pragma once

#include <json.hpp>

#include "trigroup/generators.hpp"
#include "trigroup/sl2z.hpp"
#include "trigroup/surface.hpp"
#include "trigroup/verifier.hpp"

namespace trigroup {

// [["a","b"],["c","d"]] with decimal-string entries.
nlohmann::json matrix_to_json(const Mat2Z& m);
// Throws nlohmann::json::exception or std::runtime_error on malformed input.
Mat2Z matrix_from_json(const nlohmann::json& j);

nlohmann::json invariants_to_json(const SurfaceInvariants& inv);
SurfaceInvariants invariants_from_json(const nlohmann::json& j);

// [{"pair": [c1, c2], "word": "LR...", "matrix": ...}, ...]
nlohmann::json generators_to_json(const GeneratorSet& gens);
GeneratorSet generators_from_json(const nlohmann::json& j);

nlohmann::json faces_to_json(const DualComplex& dual);
nlohmann::json split_tree_to_json(const SplitTree& tree);
nlohmann::json report_to_json(const Report& report);

}  // namespace trigroup
