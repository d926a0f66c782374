#include "spherekit/hodge.hpp"

#include <stdexcept>

#include "spherekit/points.hpp"

namespace spherekit {

GaussRat inner_hermitian(const Ext<GaussRat>& a, const Ext<GaussRat>& b) {
  GaussRat acc;
  for (const auto& [m, c] : a.comps) {
    auto it = b.comps.find(m);
    if (it != b.comps.end()) acc += c * it->second.conj();
  }
  return acc;
}

namespace {

void subsets_of_size(int first_bit, int last_bit, int size, std::uint32_t acc,
                     std::vector<std::uint32_t>& out) {
  if (size == 0) {
    out.push_back(acc);
    return;
  }
  for (int b = first_bit; b <= last_bit - size + 1; ++b)
    subsets_of_size(b + 1, last_bit, size - 1, acc | (1u << b), out);
}

const GaussRat kI(Rat(0), Rat(1));
const GaussRat kHalf(Rat(1, 2));

}  // namespace

ExtC sd_project(const ExtC& a, int sign) {
  int n = a.dim / 2;
  ExtC sa = hodge_star(a);
  if (n % 2 == 0)
    return (sign > 0 ? a + sa : a - sa) * kHalf;
  // n odd: star squares to -1 on the middle degree; the eigenvalues are
  // +/- i and Pi^{+/-} = (id -/+ i star)/2.
  ExtC isa = sa * kI;
  return (sign > 0 ? a - isa : a + isa) * kHalf;
}

SelfDualSplit sd_split(int dim) {
  if (dim < 2 || dim % 2 != 0)
    throw std::invalid_argument("sd_split: even dimension >= 2 required");
  int n = dim / 2;
  SelfDualSplit s;
  s.dim = dim;
  subsets_of_size(1, dim - 1, n - 1, 0, s.index_sets);
  const GaussRat two(Rat(2));
  for (std::uint32_t I : s.index_sets) {
    ExtC x(dim);
    x.add(1u | I, GaussRat(Rat(1)));  // e_1 ^ e_I
    s.beta_plus.push_back(sd_project(x, +1) * two);
    s.beta_minus.push_back(sd_project(x, -1) * two);
  }
  return s;
}

namespace {

// 2 Pi^-(v ^ star(alpha ^ v)) for a grade-1 v.
ExtC apply_p(const ExtC& v, const ExtC& alpha) {
  ExtC w = wedge(v, hodge_star(wedge(alpha, v)));
  return sd_project(w, -1) * GaussRat(Rat(2));
}

ExtC vector_to_ext(const std::vector<Rat>& v) {
  ExtC e(int(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) e.add(1u << i, GaussRat(v[i]));
  return e;
}

}  // namespace

std::vector<std::vector<GaussRat>> intertwiner_p(const std::vector<Rat>& v) {
  int dim = int(v.size());
  Rat norm2;
  for (const auto& x : v) norm2 += x * x;
  if (norm2 != 1) throw std::invalid_argument("intertwiner_p: non-unit vector");
  SelfDualSplit s = sd_split(dim);
  ExtC ve = vector_to_ext(v);
  std::size_t d = s.index_sets.size();
  std::vector<std::vector<GaussRat>> M(d, std::vector<GaussRat>(d));
  for (std::size_t i = 0; i < d; ++i) {
    ExtC pb = apply_p(ve, s.beta_plus[i]);
    // beta^- has squared norm 2, so the coordinate is <pb, beta_J^-> / 2
    for (std::size_t j = 0; j < d; ++j)
      M[j][i] = inner_hermitian(pb, s.beta_minus[j]) * kHalf;
  }
  return M;
}

std::vector<std::vector<Rat>> rational_rotation(int dim, std::mt19937_64& rng) {
  if (dim < 2) throw std::invalid_argument("rational_rotation: dim >= 2");
  for (;;) {
    // random skew-symmetric S, then the Cayley transform (I-S)(I+S)^{-1}
    std::vector<std::vector<Rat>> S(dim, std::vector<Rat>(dim));
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j) {
        S[i][j] = random_rat(rng, 3);
        S[j][i] = -S[i][j];
      }
    // solve (I+S) X = (I-S) by Gaussian elimination
    std::vector<std::vector<Rat>> A(dim, std::vector<Rat>(2 * dim));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        A[i][j] = S[i][j] + Rat(i == j ? 1 : 0);
        A[i][dim + j] = Rat(i == j ? 1 : 0) - S[i][j];
      }
    bool singular = false;
    for (int col = 0; col < dim && !singular; ++col) {
      int piv = -1;
      for (int r = col; r < dim; ++r)
        if (A[r][col] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) {
        singular = true;
        break;
      }
      std::swap(A[col], A[piv]);
      Rat inv = 1 / A[col][col];
      for (int j = col; j < 2 * dim; ++j) A[col][j] *= inv;
      for (int r = 0; r < dim; ++r) {
        if (r == col || A[r][col] == 0) continue;
        Rat f = A[r][col];
        for (int j = col; j < 2 * dim; ++j) A[r][j] -= f * A[col][j];
      }
    }
    if (singular) continue;  // I+S singular: redraw
    std::vector<std::vector<Rat>> R(dim, std::vector<Rat>(dim));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) R[i][j] = A[i][dim + j];
    return R;
  }
}

EquivarianceReport verify_p_equivariance(int dim, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("verify_p_equivariance: trials >= 1");
  EquivarianceReport rep;
  rep.trials = trials;
  std::mt19937_64 rng(seed);
  SelfDualSplit s = sd_split(dim);
  for (int t = 0; t < trials; ++t) {
    auto R = rational_rotation(dim, rng);
    std::vector<Rat> v = rational_sphere_points(dim - 1, 1, rng())[0];
    std::vector<Rat> Rv(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) Rv[i] += R[i][j] * v[j];
    std::vector<std::vector<GaussRat>> Rc(dim, std::vector<GaussRat>(dim));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) Rc[i][j] = GaussRat(R[i][j]);
    ExtC ve = vector_to_ext(v), rve = vector_to_ext(Rv);
    bool ok = true;
    for (const ExtC& b : s.beta_plus) {
      ExtC lhs = apply_p(rve, ext_apply_matrix(Rc, b));
      ExtC rhs = ext_apply_matrix(Rc, apply_p(ve, b));
      if (!(lhs == rhs)) {
        ok = false;
        break;
      }
    }
    if (!ok) ++rep.failures;
  }
  return rep;
}

SphereMap extract_fiber_map() {
  const int dim = 4, nv = 4;
  // symbolic unit vector v = sum v_i e_i with polynomial coefficients
  Ext<Poly> v(dim);
  for (int i = 0; i < dim; ++i) v.add(1u << i, Poly::variable(nv, i));
  SelfDualSplit s = sd_split(dim);
  auto to_poly_ext = [&](const ExtC& a) {
    Ext<Poly> r(dim);
    for (const auto& [m, c] : a.comps)
      r.add(m, Poly::constant(nv, c.re));  // coefficients are real here
    return r;
  };
  Ext<Poly> b1 = to_poly_ext(s.beta_plus[0]);
  // p(v)(beta_1^+) = 2 Pi^-(v ^ star(beta_1^+ ^ v)); n = 2 is even so
  // Pi^- = (id - star)/2 and the leading 2 cancels it.
  Ext<Poly> w = wedge(v, hodge_star(wedge(b1, v)));
  Ext<Poly> pb = w - hodge_star(w);
  SphereMap F;
  F.source_dim = 3;
  F.target_dim = 2;
  for (std::size_t j = 0; j < s.beta_minus.size(); ++j) {
    Ext<Poly> bj = to_poly_ext(s.beta_minus[j]);
    F.coords.push_back(inner_bilinear(pb, bj, Poly(nv)) * Rat(1, 2));
  }
  return F;
}

LaurentChar u1_char_exterior(int n, int k) {
  if (n < 1 || k < 0 || k > 2 * n)
    throw std::out_of_range("u1_char_exterior: need 1 <= n and 0 <= k <= 2n");
  // coefficients of prod_{planes} (1 + (z + z^{-1}) t + t^2) by t-degree
  std::vector<std::map<int, long>> by_deg(2 * n + 1);
  by_deg[0][0] = 1;
  for (int plane = 0; plane < n; ++plane) {
    std::vector<std::map<int, long>> next(2 * n + 1);
    for (int d = 0; d <= 2 * plane; ++d)
      for (const auto& [w, m] : by_deg[d]) {
        next[d][w] += m;
        next[d + 1][w + 1] += m;
        next[d + 1][w - 1] += m;
        next[d + 2][w] += m;
      }
    by_deg = std::move(next);
  }
  LaurentChar out;
  for (const auto& [w, m] : by_deg[k])
    if (m) out.mult[w] = m;
  return out;
}

namespace {

long rat_to_long(const Rat& q) {
  if (q.get_den() != 1)
    throw std::logic_error("expected an integer value");
  return q.get_num().get_si();
}

// Wedges of the complexified weight vectors f_j = e_{2j+1} - i e_{2j+2}
// (weight +1) and conj(f_j) (weight -1), one subset per plane; these span
// the complexified middle degree and are orthogonal with squared norm 2^n.
void enumerate_weight_basis(int n, int plane, int slots, int weight,
                            const ExtC& acc,
                            std::vector<std::pair<int, ExtC>>& out) {
  if (slots == 0) {
    out.emplace_back(weight, acc);
    return;
  }
  if (plane == n) return;
  int remaining_capacity = 2 * (n - plane - 1);
  auto f = [&](bool conj) {
    ExtC e(2 * n);
    e.add(1u << (2 * plane), GaussRat(Rat(1)));
    e.add(1u << (2 * plane + 1), conj ? kI : -kI);
    return e;
  };
  // skip this plane
  if (remaining_capacity >= slots)
    enumerate_weight_basis(n, plane + 1, slots, weight, acc, out);
  // take f, conj(f), or both
  if (remaining_capacity >= slots - 1) {
    enumerate_weight_basis(n, plane + 1, slots - 1, weight + 1,
                           wedge(acc, f(false)), out);
    enumerate_weight_basis(n, plane + 1, slots - 1, weight - 1,
                           wedge(acc, f(true)), out);
  }
  if (slots >= 2)
    enumerate_weight_basis(n, plane + 1, slots - 2, weight,
                           wedge(wedge(acc, f(false)), f(true)), out);
}

}  // namespace

std::pair<LaurentChar, LaurentChar> sd_characters(int n) {
  if (n < 2) throw std::invalid_argument("sd_characters: n >= 2 required");
  std::vector<std::pair<int, ExtC>> basis;
  ExtC unit(2 * n);
  unit.add(0, GaussRat(Rat(1)));
  enumerate_weight_basis(n, 0, n, 0, unit, basis);

  // Star preserves each weight space (it commutes with the torus action);
  // its eigenvalues there are +/-1 (n even) or +/-i (n odd), so the
  // +/- multiplicities follow from the dimension and the exact trace.
  std::map<int, long> dims;
  std::map<int, GaussRat> traces;
  const Rat norm2(mpz_class(1) << n);  // each basis wedge has squared norm 2^n
  for (const auto& [w, b] : basis) {
    ++dims[w];
    GaussRat t = inner_hermitian(hodge_star(b), b);
    t.re /= norm2;
    t.im /= norm2;
    traces[w] += t;
  }
  LaurentChar plus, minus;
  for (const auto& [w, d] : dims) {
    const GaussRat& tr = traces[w];
    long diff;
    if (n % 2 == 0) {
      if (tr.im != 0) throw std::logic_error("sd_characters: complex trace");
      diff = rat_to_long(tr.re);  // d+ - d-
    } else {
      if (tr.re != 0) throw std::logic_error("sd_characters: real trace");
      diff = rat_to_long(tr.im);  // trace = i (d+ - d-)
    }
    long dp = (d + diff) / 2, dm = (d - diff) / 2;
    if (dp + dm != d || dp < 0 || dm < 0)
      throw std::logic_error("sd_characters: inconsistent eigenvalue split");
    if (dp) plus.mult[w] = dp;
    if (dm) minus.mult[w] = dm;
  }
  return {plus, minus};
}

}  // namespace spherekit
