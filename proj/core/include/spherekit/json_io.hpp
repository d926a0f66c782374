#pragma once

#include <json.hpp>

#include "spherekit/bounds.hpp"
#include "spherekit/clifford.hpp"
#include "spherekit/sphere_map.hpp"
#include "spherekit/wilson.hpp"

namespace spherekit {

using Json = nlohmann::json;

// Polynomial interchange format:
// {"nvars": k, "terms": [{"exps": [e1..ek], "coeff": "p/q"}]}
// with Gaussian coefficients written "p/q+r/s i". Terms are serialized in
// descending graded-lex order so output is canonical.
Json poly_to_json(const Poly& p);
Json poly_to_json(const CPoly& p);
Poly poly_from_json(const Json& j);
CPoly cpoly_from_json(const Json& j);

// {"source_dim": n, "target_dim": r, "coords": [<poly>...]}
Json sphere_map_to_json(const SphereMap& F);
SphereMap sphere_map_from_json(const Json& j);

// adds "size", "group" ("SO"|"O"|"U"|"SU") and row-major "entries"
Json matrix_map_to_json(const MatrixPolyMap& M);
MatrixPolyMap matrix_map_from_json(const Json& j);

// {"dim": m, "structures": [[row-major integers]]}
Json clifford_to_json(const CliffordSystem& cs);
CliffordSystem clifford_from_json(const Json& j);

// {"r":, "s":, "t":, "tensor": [[[rational strings]]]}
Json normed_bilinear_to_json(const NormedBilinear& F);
NormedBilinear normed_bilinear_from_json(const Json& j);

// {"generators": [["a","b","c","d"], ...]} (row-major 2x2 rational strings)
Json schottky_to_json(const SchottkyGroup& G);
SchottkyGroup schottky_from_json(const Json& j);

// {"rank": r, "images": [[[gaussian strings]]]}
Json bundle_to_json(const FlatBundle& B);
FlatBundle bundle_from_json(const Json& j);

Json class_entry_to_json(const ClassEntry& e);

}  // namespace spherekit
