#pragma once

#include <vector>

#include "spherekit/sphere_map.hpp"

namespace spherekit {

// Flat Laplacian sum_i d^2 p / d v_i^2, exact.
Poly laplacian(const Poly& p);

// p = sum_k |v|^{2k} h_{d-2k} with every h harmonic and homogeneous.
struct HarmonicComponent {
  int k = 0;   // power of |v|^2
  Poly h;      // harmonic of degree d - 2k
};

struct HarmonicDecomposition {
  int degree = 0;
  std::vector<HarmonicComponent> components;  // increasing k, zero parts omitted
};

// Unique decomposition of a homogeneous polynomial; throws on
// non-homogeneous input (split with homogeneous_parts first).
HarmonicDecomposition harmonic_decompose(const Poly& p);

// Largest spherical-harmonic degree present in p viewed as a function on
// the sphere: reduce to NF, decompose each homogeneous part, and take the
// top degree whose harmonic components do not cancel across parts.
// 0 iff p is constant mod the ideal.
int fourier_degree(const Poly& p, const SphereContext& ctx);
int fourier_degree(const CPoly& p, const SphereContext& ctx);

// Max of fourier_degree over coordinates/entries; 0 iff the map is constant.
int map_fourier_degree(const SphereMap& F);
int map_fourier_degree(const MatrixPolyMap& M);

}  // namespace spherekit
