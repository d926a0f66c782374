#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "spherekit/poly.hpp"

namespace spherekit {

enum class GroupTag { SO, O, U, SU };

std::string group_tag_name(GroupTag g);
GroupTag group_tag_from_name(const std::string& s);

// Polynomial map S^n -> S^r, stored as r+1 coordinate polynomials in the
// n+1 ambient variables of the source sphere.
struct SphereMap {
  int source_dim = 0;  // n
  int target_dim = 0;  // r
  std::vector<Poly> coords;

  // Non-empty iff this map was built by compose(): it equals
  // factors[last] after ... after factors[0]. verify_sphere_map exploits
  // this: if each factor has residual in its own sphere ideal, so does the
  // composition (substituting the inner map into sum B_i^2 - 1 = h*g keeps
  // the product shape, with g pulled back into the source ideal).
  std::vector<std::shared_ptr<const SphereMap>> factors;

  SphereContext source_ctx() const { return SphereContext(source_dim + 1); }
  int degree_repr() const;

  static SphereMap identity(int n);
  static SphereMap constant(int n, int r);  // (1, 0, ..., 0)
};

struct VerifyReport {
  bool pass = false;
  Poly residual{0};
  std::string detail;
};

// pass iff nf_reduce(sum coords^2 - 1) == 0 in the source sphere ring.
VerifyReport verify_sphere_map(const SphereMap& F);

// Matrix-valued polynomial map S^n -> SO(r)/O(r)/U(r)/SU(r); entries stored
// row-major with Gaussian-rational coefficients (imaginary parts zero over R).
struct MatrixPolyMap {
  int source_dim = 0;
  int size = 0;
  GroupTag group = GroupTag::SO;
  std::vector<CPoly> entries;  // size*size, row-major

  SphereContext source_ctx() const { return SphereContext(source_dim + 1); }
  const CPoly& at(int i, int j) const { return entries[std::size_t(i) * size + j]; }
  CPoly& at(int i, int j) { return entries[std::size_t(i) * size + j]; }
  bool is_real() const;
  int degree_repr() const;
};

struct MatrixVerifyReport {
  bool pass = false;
  bool orthogonality_ok = false;
  bool det_constant = false;
  bool det_is_one = false;
  CPoly det_nf{0};
  Poly residual_norm{0};  // nf of sum |(M*M - I)_ij|^2, zero iff orthogonal
  std::string detail;
};

MatrixVerifyReport verify_matrix_map(const MatrixPolyMap& M);

// Projector-valued polynomial map S^n -> Gr(k, r), real entries.
struct ProjectorMap {
  int source_dim = 0;
  int ambient = 0;
  int rank = 0;
  std::vector<Poly> entries;  // ambient*ambient, row-major

  const Poly& at(int i, int j) const { return entries[std::size_t(i) * ambient + j]; }
};

struct ProjectorVerifyReport {
  bool pass = false;
  bool idempotent = false;
  bool symmetric = false;
  bool trace_ok = false;
};

ProjectorVerifyReport verify_projector_map(const ProjectorMap& P);

bool is_constant(const SphereMap& F);
bool is_constant(const MatrixPolyMap& M);

// G after F; F: S^n -> S^m, G: S^m -> S^r.
SphereMap compose(const SphereMap& F, const SphereMap& G);

// S^n -> S^{n+1}, appending a zero coordinate.
SphereMap equatorial_inclusion(int n);

// Substitutes v_i = 0 (1-based i) and reindexes: S^{n-1} -> S^r.
SphereMap restrict_to_great_sphere(const SphereMap& F, int i);

// v -> (-1)^r (2 pi_v - 1), post-composed with a constant determinant
// correction for odd r so that det == 1. Real: S^r -> SO(r+1); complex:
// S^{2r+1} -> SU(r+1) in 2r+2 real variables (z_j = v_{2j-1} + i v_{2j}).
MatrixPolyMap reflection_map(int r, bool complex_field);

// Column j (1-based) of M as a sphere map. Complex matrices are realified
// (S^n -> S^{2r-1}).
SphereMap column_map(const MatrixPolyMap& M, int j);

// Rank-1 projector onto the span of F(v) inside R^ambient.
ProjectorMap grassmannian_projector_map(const SphereMap& F, int ambient);

// Coordinatewise NF equality in the source sphere ring.
bool maps_equal_nf(const SphereMap& F, const SphereMap& G);

std::vector<Rat> eval_map(const SphereMap& F, const std::vector<Rat>& point);

}  // namespace spherekit
