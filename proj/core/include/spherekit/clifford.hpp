#pragma once

#include <vector>

#include "spherekit/sphere_map.hpp"

namespace spherekit {

using IntMat = std::vector<std::vector<int>>;

IntMat int_identity(int n);
IntMat int_mul(const IntMat& a, const IntMat& b);
IntMat int_transpose(const IntMat& a);
IntMat int_kron(const IntMat& a, const IntMat& b);
IntMat int_block_diag(const IntMat& a, int copies);
IntMat int_neg(const IntMat& a);
bool int_eq(const IntMat& a, const IntMat& b);

// Radon-Hurwitz number: rho(m) = 2^c + 8d for m = odd * 2^{c+4d}, 0 <= c <= 3.
int radon_hurwitz(long m);

// Anticommuting orthogonal complex structures J_1..J_k on R^m:
// J_i^T J_i = I, J_i^2 = -I, J_i J_j = -J_j J_i (i != j).
struct CliffordSystem {
  int dim = 0;
  std::vector<IntMat> structures;
};

struct CliffordVerifyReport {
  bool pass = false;
  bool orthogonal = false;
  bool squares = false;
  bool anticommute = false;
};

CliffordVerifyReport verify_clifford(const CliffordSystem& cs);

// rho(m) - 1 structures on R^m, built from the standard Clifford module
// tables (complex/quaternion/octonion bases, doubling, and the period-8
// tensor step). All entries lie in {-1, 0, 1}.
CliffordSystem clifford_system(long m);

// Bilinear F: R^r x R^s -> R^t with |F(x,y)|^2 = |x|^2 |y|^2.
struct NormedBilinear {
  int r = 0, s = 0, t = 0;
  // tensor[k][i][j]: coefficient of x_i y_j in F_k
  std::vector<std::vector<std::vector<Rat>>> tensor;

  Poly component(int k) const;  // F_k as a polynomial in (x_1..x_r, y_1..y_s)
};

// F(x, y) = y_0 x + y_1 J_1 x + ... + y_{k} J_k x.
NormedBilinear normed_bilinear_from_clifford(const CliffordSystem& cs);

// Checks |F(x,y)|^2 = |x|^2 |y|^2 as an exact polynomial identity.
bool verify_normed(const NormedBilinear& F);

// H(x,y) = (|x|^2 - |y|^2, 2 F(x,y)): S^{r+s-1} -> S^t. Throws if F fails
// verify_normed.
SphereMap hopf_construction(const NormedBilinear& F);

// Quadratic fibration S^{2k+1} -> S^{2k} from a single complex structure.
SphereMap odd_sphere_fibration(int k);

enum class ChainName { S31_to_S16, S47_to_S32 };

// The composition witnesses behind q(16..31) = 16 and q(32..47) = 32;
// memoized, safe for concurrent use.
const SphereMap& chain_witness(ChainName name);

}  // namespace spherekit
