#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "tracelab/module.hpp"
#include "tracelab/value_ideal.hpp"

namespace tracelab {

using nlohmann::json;

json load_json_file(const std::string& path);

// semigroup files: {"generators": [3,4,5]}
NumericalSemigroup semigroup_from_json(const json& j);
json semigroup_to_json(const NumericalSemigroup& S);

// ideal files: {"semigroup": {...}, "values": [0,1]} (closure of values + S);
// emitted with a minimal generating set so the output re-parses exactly
ValueIdeal ideal_from_json(const json& j);
json ideal_to_json(const ValueIdeal& I);

// module files: {"summands": [ideal, ideal, ...]}
ModuleSum module_sum_from_json(const json& j);
json module_sum_to_json(const ModuleSum& M);

// machine window of a value set: {"min":..., "sporadic":[...], "conductor":...}
json value_window_json(const ValueIdeal& I);

// algebra files: {"p": 101, "vars": ["x","y"], "monomial_relations": ["x^2","x*y","y^2"]}
AlgebraPtr algebra_from_json(const json& j);
json algebra_to_json(const ArtinianAlgebra& A);

// module over an algebra: {"kind": "residue_field"} |
// {"kind": "ideal", "generators": ["x","y^2"]} |
// {"kind": "presentation", "matrix": [["x","y"],["0","x^2"]]}
PresentedModule art_module_from_json(const json& j, AlgebraPtr A);

// subspace of the regular representation as a list of element strings
json subspace_to_json(const ArtinianAlgebra& A, const Subspace& V);

/// Leading elements of a value set for human output: sporadic values, three
/// tail values, then an ellipsis, e.g. "{3,4,5,...}".
std::string value_prefix(const ValueIdeal& I);

}  // namespace tracelab
