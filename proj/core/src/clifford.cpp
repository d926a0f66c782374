#include "spherekit/clifford.hpp"

#include <mutex>
#include <stdexcept>

namespace spherekit {

IntMat int_identity(int n) {
  IntMat m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat int_mul(const IntMat& a, const IntMat& b) {
  int n = int(a.size()), p = int(b.size()), q = int(b[0].size());
  IntMat r(n, std::vector<int>(q, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < p; ++k) {
      int aik = a[i][k];
      if (!aik) continue;
      for (int j = 0; j < q; ++j) r[i][j] += aik * b[k][j];
    }
  return r;
}

IntMat int_transpose(const IntMat& a) {
  int n = int(a.size()), m = int(a[0].size());
  IntMat r(m, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) r[j][i] = a[i][j];
  return r;
}

IntMat int_kron(const IntMat& a, const IntMat& b) {
  int n = int(a.size()), m = int(b.size());
  IntMat r(n * m, std::vector<int>(n * m, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!a[i][j]) continue;
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) r[i * m + k][j * m + l] = a[i][j] * b[k][l];
    }
  return r;
}

IntMat int_block_diag(const IntMat& a, int copies) {
  int n = int(a.size());
  IntMat r(n * copies, std::vector<int>(n * copies, 0));
  for (int c = 0; c < copies; ++c)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r[c * n + i][c * n + j] = a[i][j];
  return r;
}

IntMat int_neg(const IntMat& a) {
  IntMat r = a;
  for (auto& row : r)
    for (int& x : row) x = -x;
  return r;
}

bool int_eq(const IntMat& a, const IntMat& b) { return a == b; }

int radon_hurwitz(long m) {
  if (m < 1) throw std::invalid_argument("radon_hurwitz: m >= 1 required");
  int a = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++a;
  }
  int c = a % 4, d = a / 4;
  return (1 << c) + 8 * d;
}

CliffordVerifyReport verify_clifford(const CliffordSystem& cs) {
  CliffordVerifyReport rep;
  IntMat id = int_identity(cs.dim);
  IntMat neg_id = int_neg(id);
  rep.orthogonal = rep.squares = rep.anticommute = true;
  for (std::size_t i = 0; i < cs.structures.size(); ++i) {
    const IntMat& J = cs.structures[i];
    if (!int_eq(int_mul(int_transpose(J), J), id)) rep.orthogonal = false;
    if (!int_eq(int_mul(J, J), neg_id)) rep.squares = false;
    for (std::size_t j = i + 1; j < cs.structures.size(); ++j) {
      const IntMat& K = cs.structures[j];
      IntMat s = int_mul(J, K);
      IntMat t = int_mul(K, J);
      for (int p = 0; p < cs.dim; ++p)
        for (int q = 0; q < cs.dim; ++q)
          if (s[p][q] + t[p][q] != 0) rep.anticommute = false;
    }
  }
  rep.pass = rep.orthogonal && rep.squares && rep.anticommute;
  return rep;
}

namespace {

// Left-multiplication matrices of the imaginary units of C, H, O in the
// bases (1), (1,i,j,k), (1,e1..e7). Fano triples (a,b,c): e_a e_b = e_c.
std::vector<IntMat> division_algebra_structures(int dim) {
  static const int triples[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6},
                                    {2, 5, 7}, {3, 4, 7}, {3, 6, 5}};
  int units = dim - 1;  // 1, 3 or 7 imaginary units
  // mult[a][b] = signed index of e_a * e_b (a, b >= 1), 0-index = scalar 1
  std::vector<std::vector<int>> mult(dim, std::vector<int>(dim, 0));
  auto set = [&](int a, int b, int c) { mult[a][b] = c; };
  for (const auto& t : triples) {
    if (t[0] > units || t[1] > units || t[2] > units) continue;
    set(t[0], t[1], t[2]);
    set(t[1], t[2], t[0]);
    set(t[2], t[0], t[1]);
    set(t[1], t[0], -t[2]);
    set(t[2], t[1], -t[0]);
    set(t[0], t[2], -t[1]);
  }
  std::vector<IntMat> out;
  for (int a = 1; a <= units; ++a) {
    IntMat L(dim, std::vector<int>(dim, 0));
    L[a][0] = 1;   // e_a * 1 = e_a
    L[0][a] = -1;  // e_a * e_a = -1
    for (int b = 1; b <= units; ++b) {
      if (b == a) continue;
      int c = mult[a][b];
      if (c > 0) L[c][b] = 1;
      else L[-c][b] = -1;
    }
    out.push_back(std::move(L));
  }
  return out;
}

int min_dim_for(int k) {
  if (k == 0) return 1;
  if (k == 1) return 2;
  if (k <= 3) return 4;
  if (k <= 7) return 8;
  if (k == 8) return 16;
  return 16 * min_dim_for(k - 8);
}

// Minimal-dimension system of k anticommuting structures.
std::vector<IntMat> minimal_system(int k) {
  if (k == 0) return {};
  if (k <= 7) {
    int dim = min_dim_for(k);
    auto all = division_algebra_structures(dim);
    all.resize(std::size_t(k));
    return all;
  }
  if (k == 8) {
    // double the octonion system: [[0, J],[J, 0]] plus [[0, I],[-I, 0]]
    auto oct = division_algebra_structures(8);
    std::vector<IntMat> out;
    IntMat swap8{{0, 1}, {1, 0}};
    for (const auto& J : oct) out.push_back(int_kron(swap8, J));
    IntMat sympl{{0, 1}, {-1, 0}};
    out.push_back(int_kron(sympl, int_identity(8)));
    return out;
  }
  // period-8 step: Cl_{k} from Cl_{k-8} tensor Cl_8 on R^16
  auto base = minimal_system(k - 8);
  auto cl8 = minimal_system(8);
  IntMat omega = int_identity(16);
  for (const auto& K : cl8) omega = int_mul(omega, K);
  int nb = min_dim_for(k - 8);
  std::vector<IntMat> out;
  IntMat idb = int_identity(nb);
  for (const auto& K : cl8) out.push_back(int_kron(idb, K));
  for (const auto& J : base) out.push_back(int_kron(J, omega));
  return out;
}

}  // namespace

CliffordSystem clifford_system(long m) {
  if (m < 1) throw std::invalid_argument("clifford_system: m >= 1 required");
  int k = radon_hurwitz(m) - 1;
  CliffordSystem cs;
  cs.dim = int(m);
  if (k == 0) return cs;
  auto minimal = minimal_system(k);
  int nd = min_dim_for(k);
  int copies = int(m) / nd;
  for (const auto& J : minimal) cs.structures.push_back(int_block_diag(J, copies));
  return cs;
}

Poly NormedBilinear::component(int k) const {
  int nv = r + s;
  Poly p(nv);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < s; ++j) {
      const Rat& c = tensor[k][i][j];
      if (c == 0) continue;
      Mono m(nv);
      m.set(i, 1);
      m.set(r + j, 1);
      p.add_term(m, c);
    }
  return p;
}

NormedBilinear normed_bilinear_from_clifford(const CliffordSystem& cs) {
  if (!verify_clifford(cs).pass)
    throw std::invalid_argument("normed_bilinear_from_clifford: invalid system");
  NormedBilinear F;
  F.r = cs.dim;
  F.s = int(cs.structures.size()) + 1;
  F.t = cs.dim;
  F.tensor.assign(F.t, std::vector<std::vector<Rat>>(
                           F.r, std::vector<Rat>(F.s, Rat(0))));
  for (int k = 0; k < F.t; ++k) {
    F.tensor[k][k][0] = 1;  // y_0 x
    for (std::size_t j = 0; j < cs.structures.size(); ++j)
      for (int i = 0; i < F.r; ++i) {
        int c = cs.structures[j][k][i];
        if (c) F.tensor[k][i][int(j) + 1] = c;
      }
  }
  return F;
}

bool verify_normed(const NormedBilinear& F) {
  int nv = F.r + F.s;
  Poly lhs(nv);
  for (int k = 0; k < F.t; ++k) {
    Poly fk = F.component(k);
    lhs += fk * fk;
  }
  Poly x2(nv), y2(nv);
  for (int i = 0; i < F.r; ++i) {
    Mono m(nv);
    m.set(i, 2);
    x2.add_term(m, Rat(1));
  }
  for (int j = 0; j < F.s; ++j) {
    Mono m(nv);
    m.set(F.r + j, 2);
    y2.add_term(m, Rat(1));
  }
  return lhs == x2 * y2;
}

SphereMap hopf_construction(const NormedBilinear& F) {
  if (!verify_normed(F))
    throw std::invalid_argument("hopf_construction: input is not norm-multiplicative");
  int nv = F.r + F.s;
  SphereMap H;
  H.source_dim = F.r + F.s - 1;
  H.target_dim = F.t;
  Poly first(nv);
  for (int i = 0; i < F.r; ++i) {
    Mono m(nv);
    m.set(i, 2);
    first.add_term(m, Rat(1));
  }
  for (int j = 0; j < F.s; ++j) {
    Mono m(nv);
    m.set(F.r + j, 2);
    first.add_term(m, Rat(-1));
  }
  H.coords.push_back(std::move(first));
  for (int k = 0; k < F.t; ++k) H.coords.push_back(F.component(k) * Rat(2));
  return H;
}

SphereMap odd_sphere_fibration(int k) {
  if (k < 1) throw std::invalid_argument("odd_sphere_fibration: k >= 1 required");
  CliffordSystem cs;
  cs.dim = 2 * k;
  IntMat rot{{0, -1}, {1, 0}};
  cs.structures.push_back(int_block_diag(rot, k));
  return hopf_construction(normed_bilinear_from_clifford(cs));
}

const SphereMap& chain_witness(ChainName name) {
  static std::mutex mu;
  static SphereMap s31, s47;
  static bool built31 = false, built47 = false;
  std::scoped_lock lock(mu);
  if (name == ChainName::S31_to_S16) {
    if (!built31) {
      SphereMap a = hopf_construction(normed_bilinear_from_clifford(clifford_system(24)));
      SphereMap b = hopf_construction(normed_bilinear_from_clifford(clifford_system(16)));
      s31 = compose(a, b);
      built31 = true;
    }
    return s31;
  }
  if (!built47) {
    SphereMap a = hopf_construction(normed_bilinear_from_clifford(clifford_system(40)));
    SphereMap b = hopf_construction(normed_bilinear_from_clifford(clifford_system(32)));
    s47 = compose(compose(a, equatorial_inclusion(40)), b);
    built47 = true;
  }
  return s47;
}

}  // namespace spherekit
