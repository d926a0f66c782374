#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "spherekit/rational.hpp"

namespace spherekit {

// Exact rational points on S^n via inverse stereographic projection of
// random rational points in R^n:
//   v_i = 2 t_i / (1 + |t|^2),  v_{n+1} = (1 - |t|^2) / (1 + |t|^2).
// Every returned vector satisfies sum v_i^2 = 1 exactly.
std::vector<std::vector<Rat>> rational_sphere_points(int n, int count,
                                                     std::uint64_t seed);

// One random rational with numerator in [-bound, bound] and denominator in
// [1, bound].
Rat random_rat(std::mt19937_64& rng, int bound = 9);

}  // namespace spherekit
