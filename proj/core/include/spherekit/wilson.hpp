#pragma once

#include <complex>
#include <random>
#include <vector>

#include "spherekit/rational.hpp"

namespace spherekit {

// 2x2 exact rational matrix [[a, b], [c, d]], determinant 1 when used as a
// hyperbolic isometry.
struct RatMat2 {
  Rat a, b, c, d;

  Rat det() const { return a * d - b * c; }
  Rat trace() const { return a + d; }
  RatMat2 inverse_sl2() const { return {d, -b, -c, a}; }  // adjugate, det = 1
};

RatMat2 mat2_mul(const RatMat2& x, const RatMat2& y);

// Free convex-cocompact group of hyperbolic isometries, given by exact
// SL(2, Q) generators. Words are sequences of nonzero letters: letter g > 0
// means generator g-1, letter -g its inverse.
struct SchottkyGroup {
  std::vector<RatMat2> generators;

  int rank() const { return int(generators.size()); }
};

// Throws unless every generator has det 1 and |trace| > 2.
void validate_schottky(const SchottkyGroup& G);

using Word = std::vector<int>;
using CMat = std::vector<std::vector<GaussRat>>;

// Cyclic reduction followed by the minimal cyclic rotation: the canonical
// representative of the conjugacy class (oriented; w and w^-1 stay distinct).
Word canonical_class(const Word& w);
Word inverse_word(const Word& w);

// Longest repeated block: w = root^k with root primitive.
Word primitive_root(const Word& w);

struct ClassEntry {
  Word word;           // canonical representative
  bool primitive = false;
  double length = 0.0;  // 2 arccosh(|trace|/2)
};

// One entry per conjugacy class of nonempty cyclically reduced words of
// length <= max_len, sorted by (length, word).
std::vector<ClassEntry> enumerate_classes(const SchottkyGroup& G, int max_len);

RatMat2 word_matrix(const SchottkyGroup& G, const Word& w);

// Throws when the class is not hyperbolic (|trace| <= 2).
double geodesic_length(const SchottkyGroup& G, const Word& w);

// Flat orthogonal/unitary bundle: one exact unitary matrix per generator.
struct FlatBundle {
  int rank = 0;
  std::vector<CMat> images;
};

void validate_bundle(const FlatBundle& B, int group_rank);

// Ordered product of generator images along the word; inverse letters use
// the conjugate transpose.
CMat holonomy(const FlatBundle& B, const Word& w);

GaussRat wilson_loop(const FlatBundle& B, const Word& w);
std::vector<GaussRat> wilson_vector(const FlatBundle& B,
                                    const std::vector<ClassEntry>& classes);

// Wave-trace singularity weight: primitive length over 2 pi |det(1-P)|^{1/2}
// times the holonomy trace, with |det(1-P)|^{1/2} = 2 sinh(l/2) for surface
// geodesic flow.
std::complex<double> dg_coefficient(const SchottkyGroup& G, const FlatBundle& B,
                                    const ClassEntry& entry);

// Pairs of distinct classes whose lengths differ by less than tol, excluding
// the forced w / w^-1 equality.
std::vector<std::pair<std::size_t, std::size_t>> check_simple_length_spectrum(
    const std::vector<ClassEntry>& classes, double tol);

// Constant gauge transformation: images become U^-1 (image) U.
FlatBundle gauge_conjugate(const FlatBundle& B, const CMat& U);

CMat mat_mul(const CMat& x, const CMat& y);
CMat mat_conj_transpose(const CMat& x);
GaussRat mat_trace(const CMat& x);
bool mat_is_unitary(const CMat& x);

// Exact random unitary: a product of diagonal unit Gaussian-rational phases
// and rational Givens rotations (Pythagorean parametrization).
CMat random_unitary(int rank, std::mt19937_64& rng);

}  // namespace spherekit
