#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "spherekit/sphere_map.hpp"

namespace spherekit {

namespace detail {
inline bool ext_zero(const Rat& c) { return c == 0; }
inline bool ext_zero(const GaussRat& c) { return c.re == 0 && c.im == 0; }
inline bool ext_zero(const Poly& c) { return c.is_zero(); }
}  // namespace detail

// Element of the exterior algebra of R^dim over coefficient ring K
// (Rat, GaussRat, or Poly for symbolic vectors). Basis multivectors are
// bitmasks: bit i stands for e_{i+1}; the basis is orthonormal.
template <typename K>
struct Ext {
  int dim = 0;
  std::map<std::uint32_t, K> comps;

  explicit Ext(int d = 0) : dim(d) {}

  void add(std::uint32_t mask, const K& c) {
    if (detail::ext_zero(c)) return;
    auto [it, fresh] = comps.emplace(mask, c);
    if (!fresh) {
      it->second += c;
      if (detail::ext_zero(it->second)) comps.erase(it);
    }
  }

  bool is_zero() const { return comps.empty(); }
  bool operator==(const Ext& o) const { return dim == o.dim && comps == o.comps; }
};

// Sign of e_A wedge e_B relative to the increasing basis element e_{A|B};
// 0 when the masks intersect.
inline int wedge_sign(std::uint32_t a, std::uint32_t b) {
  if (a & b) return 0;
  int inv = 0;
  while (b) {
    std::uint32_t low = b & -b;
    inv += __builtin_popcount(a & ~(low - 1) & ~low);
    b ^= low;
  }
  return (inv % 2 == 0) ? 1 : -1;
}

template <typename K>
Ext<K> wedge(const Ext<K>& a, const Ext<K>& b) {
  Ext<K> r(a.dim);
  for (const auto& [ma, ca] : a.comps)
    for (const auto& [mb, cb] : b.comps) {
      int s = wedge_sign(ma, mb);
      if (!s) continue;
      K c = ca * cb;
      r.add(ma | mb, s > 0 ? c : -c);
    }
  return r;
}

// Euclidean Hodge star with the standard orientation e_1 ^ ... ^ e_dim.
template <typename K>
Ext<K> hodge_star(const Ext<K>& a) {
  Ext<K> r(a.dim);
  std::uint32_t full = (a.dim == 32) ? 0xffffffffu : ((1u << a.dim) - 1);
  for (const auto& [m, c] : a.comps) {
    std::uint32_t mc = full & ~m;
    int s = wedge_sign(m, mc);
    r.add(mc, s > 0 ? c : -c);
  }
  return r;
}

template <typename K>
Ext<K> operator+(Ext<K> a, const Ext<K>& b) {
  for (const auto& [m, c] : b.comps) a.add(m, c);
  return a;
}

template <typename K>
Ext<K> operator-(Ext<K> a, const Ext<K>& b) {
  for (const auto& [m, c] : b.comps) a.add(m, -c);
  return a;
}

template <typename K>
Ext<K> operator*(const Ext<K>& a, const K& s) {
  Ext<K> r(a.dim);
  for (const auto& [m, c] : a.comps) r.add(m, c * s);
  return r;
}

// Bilinear pairing in the orthonormal multivector basis (real use).
template <typename K>
K inner_bilinear(const Ext<K>& a, const Ext<K>& b, const K& zero) {
  K acc = zero;
  for (const auto& [m, c] : a.comps) {
    auto it = b.comps.find(m);
    if (it != b.comps.end()) acc += c * it->second;
  }
  return acc;
}

// Hermitian pairing (conjugates the second argument's coefficients).
GaussRat inner_hermitian(const Ext<GaussRat>& a, const Ext<GaussRat>& b);

// Extends a linear map of R^dim to the exterior algebra
// (columns of R are the images of e_1..e_dim).
template <typename K>
Ext<K> ext_apply_matrix(const std::vector<std::vector<K>>& R, const Ext<K>& a) {
  Ext<K> out(a.dim);
  for (const auto& [m, c] : a.comps) {
    Ext<K> acc(a.dim);
    acc.add(0, c);
    for (int i = 0; i < a.dim; ++i) {
      if (!(m & (1u << i))) continue;
      Ext<K> img(a.dim);
      for (int j = 0; j < a.dim; ++j) img.add(1u << j, R[j][i]);
      acc = wedge(acc, img);
    }
    out = out + acc;
  }
  return out;
}

using ExtC = Ext<GaussRat>;

// Middle-degree split of Lambda^n(R^{2n}). The bases are the unnormalized
// beta_I^{+/-} = e_1 ^ e_I +/- star(e_1 ^ e_I) (n even; for n odd the star
// term carries -/+ i), indexed by increasing (n-1)-subsets I of {2..2n};
// every beta has squared norm 2, keeping all downstream matrices rational.
struct SelfDualSplit {
  int dim = 0;  // 2n
  std::vector<std::uint32_t> index_sets;  // masks of I over bits 1..2n-1
  std::vector<ExtC> beta_plus, beta_minus;
};

SelfDualSplit sd_split(int dim);

// Projection (id + sign*star)/2 for n even, (id - sign*i*star)/2 for n odd;
// sign is +1 or -1.
ExtC sd_project(const ExtC& a, int sign);

// alpha -> 2 Pi^-(v ^ star(alpha ^ v)) for an exact unit vector v, as a
// matrix from the beta^+ basis to the beta^- basis. Orthogonal for every
// unit v; the identity matrix at v = e_1.
std::vector<std::vector<GaussRat>> intertwiner_p(const std::vector<Rat>& v);

// Exact special-orthogonal matrix via the Cayley transform of a random
// rational skew-symmetric matrix.
std::vector<std::vector<Rat>> rational_rotation(int dim, std::mt19937_64& rng);

struct EquivarianceReport {
  int trials = 0;
  int failures = 0;
  bool pass() const { return trials > 0 && failures == 0; }
};

// Checks p(Rv) after Lambda^n R = Lambda^n R after p(v) exactly, on the
// full beta^+ basis, for `trials` Cayley rotations and random unit vectors.
EquivarianceReport verify_p_equivariance(int dim, int trials, std::uint64_t seed);

// dim 4 only: v -> coordinates of p(v)(beta_1^+) in the beta^- basis, a
// quadratic sphere map S^3 -> S^2.
SphereMap extract_fiber_map();

// Laurent polynomial in one variable: weight -> multiplicity.
struct LaurentChar {
  std::map<int, long> mult;

  bool operator==(const LaurentChar& o) const { return mult == o.mult; }
  long total() const {
    long t = 0;
    for (const auto& [w, m] : mult) t += m;
    return t;
  }
};

// Weight character of Lambda^k of n copies of the standard U(1) rotation
// plane: the t^k coefficient of prod (1 + z t)(1 + z^{-1} t).
LaurentChar u1_char_exterior(int n, int k);

// Splits u1_char_exterior(n, n) by the star eigenvalue on Lambda^n(R^{2n});
// returns (char of Lambda^+, char of Lambda^-).
std::pair<LaurentChar, LaurentChar> sd_characters(int n);

}  // namespace spherekit
