// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. All algebraic checks are exact; the only floating-point
// comparisons are the two pinned tolerances below.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "spherekit/bounds.hpp"
#include "spherekit/clifford.hpp"
#include "spherekit/harmonics.hpp"
#include "spherekit/hodge.hpp"
#include "spherekit/json_io.hpp"
#include "spherekit/points.hpp"
#include "spherekit/wilson.hpp"

using namespace spherekit;

namespace {

constexpr double kDgRelTol = 1e-10;    // trace-formula coefficient vs oracle
constexpr double kSpectrumTol = 1e-9;  // length-collision resolution

bool criterion_q_table() {
  auto expected = [](int n) {
    if (n <= 3) return 2;
    if (n <= 7) return 4;
    if (n <= 15) return 8;
    if (n <= 31) return 16;
    return 32;
  };
  for (int n = 2; n <= 47; ++n) {
    QBound b = q_bounds(n);
    if (!b.exact || b.lower != expected(n) || b.upper != expected(n)) return false;
  }
  QBound b48 = q_bounds(48);
  return !b48.exact && b48.lower == 32 && b48.upper == 48;
}

bool criterion_witnesses() {
  for (int n = 2; n <= 48; ++n) {
    QBound b = q_bounds(n);
    if (!b.witness) return false;
    VerifyReport rep = verify_sphere_map(*b.witness);
    if (!rep.pass || !rep.residual.is_zero()) return false;
    if (is_constant(*b.witness)) return false;
  }
  return chain_witness(ChainName::S31_to_S16).degree_repr() == 4;
}

bool criterion_clifford() {
  for (long m = 1; m <= 64; ++m) {
    CliffordSystem cs = clifford_system(m);
    if (int(cs.structures.size()) != radon_hurwitz(m) - 1) return false;
    if (!verify_clifford(cs).pass) return false;
  }
  for (long m : {2L, 4L, 8L, 16L, 24L, 32L, 40L}) {
    if (!verify_normed(normed_bilinear_from_clifford(clifford_system(m))))
      return false;
  }
  return true;
}

bool criterion_matrix_constructions() {
  for (int r = 1; r <= 6; ++r) {
    for (bool cplx : {false, true}) {
      MatrixPolyMap M = reflection_map(r, cplx);
      MatrixVerifyReport rep = verify_matrix_map(M);
      if (!rep.pass || !rep.det_is_one) return false;
    }
  }
  for (int r = 1; r <= 3; ++r) {
    for (bool cplx : {false, true}) {
      MatrixPolyMap M = reflection_map(r, cplx);
      for (int j = 1; j <= M.size; ++j)
        if (!verify_sphere_map(column_map(M, j)).pass) return false;
    }
  }
  // rank-1 projectors onto the image of verified sphere maps
  std::vector<SphereMap> maps = {
      SphereMap::identity(2),
      hopf_construction(normed_bilinear_from_clifford(clifford_system(2)))};
  for (const auto& F : maps) {
    ProjectorMap P = grassmannian_projector_map(F, F.target_dim + 1);
    ProjectorVerifyReport rep = verify_projector_map(P);
    if (!rep.idempotent || !rep.symmetric || !rep.trace_ok) return false;
  }
  return true;
}

bool isometry_on_unit_vectors(int dim, int count, std::uint64_t seed) {
  for (const auto& v : rational_sphere_points(dim - 1, count, seed)) {
    auto M = intertwiner_p(v);
    std::size_t d = M.size();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        GaussRat dot;
        for (std::size_t k = 0; k < d; ++k) dot += M[k][i].conj() * M[k][j];
        if (dot != (i == j ? GaussRat(Rat(1)) : GaussRat())) return false;
      }
  }
  return true;
}

bool criterion_hodge() {
  if (!isometry_on_unit_vectors(4, 100, 101)) return false;
  if (!isometry_on_unit_vectors(8, 100, 102)) return false;
  if (!verify_p_equivariance(4, 100, 7).pass()) return false;
  if (!verify_p_equivariance(8, 25, 8).pass()) return false;

  // fiber map = (v1^2+v2^2-v3^2-v4^2, 2(v2v3-v1v4), 2(v1v3+v2v4))
  auto mono = [](std::initializer_list<int> exps, long c) {
    Mono m(4);
    int i = 0;
    for (int e : exps) m.set(i++, e);
    Poly p(4);
    p.add_term(m, Rat(c));
    return p;
  };
  SphereMap H;
  H.source_dim = 3;
  H.target_dim = 2;
  H.coords = {mono({2, 0, 0, 0}, 1) + mono({0, 2, 0, 0}, 1) +
                  mono({0, 0, 2, 0}, -1) + mono({0, 0, 0, 2}, -1),
              mono({0, 1, 1, 0}, 2) + mono({1, 0, 0, 1}, -2),
              mono({1, 0, 1, 0}, 2) + mono({0, 1, 0, 1}, 2)};
  return maps_equal_nf(extract_fiber_map(), H);
}

bool criterion_characters() {
  for (int n = 2; n <= 6; ++n) {
    LaurentChar ch = u1_char_exterior(n, n);
    auto it = ch.mult.find(n);
    if (it == ch.mult.end() || it->second != 1) return false;
  }
  // brute-force oracle: weight w in Lambda^k has multiplicity
  // sum_{a-b=w, a+b=k} C(n,a) C(n,b)
  auto binom = [](long n, long k) {
    if (k < 0 || k > n) return 0L;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (int n = 2; n <= 4; ++n) {
    LaurentChar expected;
    for (int a = 0; a <= n; ++a) {
      int b = n - a;
      long m = binom(n, a) * binom(n, b);
      if (m) expected.mult[a - b] += m;
    }
    auto [cp, cm] = sd_characters(n);
    LaurentChar total;
    for (const auto& [w, m] : cp.mult) total.mult[w] += m;
    for (const auto& [w, m] : cm.mult) total.mult[w] += m;
    if (!(total == expected)) return false;
    if (cp == cm) return false;
  }
  auto [p2, m2] = sd_characters(2);
  LaurentChar ep, em;
  ep.mult = {{2, 1}, {0, 1}, {-2, 1}};
  em.mult = {{0, 3}};
  return p2 == ep && m2 == em;
}

bool criterion_harmonics() {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 200; ++trial) {
    int nvars = 2 + int(rng() % 7);
    int deg = 1 + int(rng() % 6);
    Poly p(nvars);
    int terms = 2 + int(rng() % 5);
    for (int t = 0; t < terms; ++t) {
      Mono m(nvars);
      int rem = deg;
      for (int i = 0; i + 1 < nvars; ++i) {
        int e = int(rng() % (rem + 1));
        m.set(i, e);
        rem -= e;
      }
      m.set(nvars - 1, rem);
      p.add_term(m, random_rat(rng));
    }
    if (p.is_zero()) continue;
    HarmonicDecomposition d = harmonic_decompose(p);
    Poly r2(nvars);
    for (int i = 0; i < nvars; ++i)
      r2 += Poly::variable(nvars, i) * Poly::variable(nvars, i);
    Poly rebuilt(nvars);
    for (const auto& comp : d.components) {
      if (!laplacian(comp.h).is_zero()) return false;
      Poly term = comp.h;
      for (int j = 0; j < comp.k; ++j) term *= r2;
      rebuilt += term;
    }
    if (rebuilt != p) return false;
  }

  SphereMap H = hopf_construction(normed_bilinear_from_clifford(clifford_system(2)));
  SphereContext ctx = H.source_ctx();
  for (const auto& c : H.coords)
    if (fourier_degree(c, ctx) != 2) return false;

  // 100-map suite: zero degree iff constant
  std::vector<SphereMap> suite;
  for (int i = 0; i < 100; ++i) {
    switch (i % 5) {
      case 0:
        suite.push_back(SphereMap::constant(2 + i % 3, 2 + i % 4));
        break;
      case 1:
        suite.push_back(SphereMap::identity(1 + i % 4));
        break;
      case 2:
        suite.push_back(restrict_to_great_sphere(H, 1 + i % 4));
        break;
      case 3:
        suite.push_back(compose(H, equatorial_inclusion(2)));
        break;
      default:
        suite.push_back(column_map(reflection_map(1 + i % 3, false), 1));
        break;
    }
  }
  for (const auto& F : suite)
    if ((map_fourier_degree(F) == 0) != is_constant(F)) return false;
  return true;
}

SchottkyGroup generic_group() {
  SchottkyGroup G;
  G.generators.push_back({Rat(3), Rat(0), Rat(0), Rat(1, 3)});
  G.generators.push_back({Rat(49, 5), Rat(-24, 5), Rat(48, 5), Rat(-23, 5)});
  return G;
}

FlatBundle trivial_bundle(int rank, int group_rank) {
  FlatBundle B;
  B.rank = rank;
  CMat id(rank, std::vector<GaussRat>(rank, GaussRat()));
  for (int i = 0; i < rank; ++i) id[i][i] = GaussRat(Rat(1));
  B.images.assign(group_rank, id);
  return B;
}

bool criterion_wilson() {
  SchottkyGroup G = generic_group();
  auto classes = enumerate_classes(G, 8);

  // (a) trivial bundles
  for (int rank : {1, 2, 3}) {
    FlatBundle B = trivial_bundle(rank, G.rank());
    for (const auto& e : classes)
      if (wilson_loop(B, e.word) != GaussRat(Rat(rank))) return false;
  }

  // (b) exact gauge invariance, 20 conjugations
  std::mt19937_64 rng(77);
  FlatBundle B2;
  B2.rank = 2;
  B2.images = {random_unitary(2, rng), random_unitary(2, rng)};
  auto base = wilson_vector(B2, classes);
  for (int t = 0; t < 20; ++t) {
    FlatBundle Bg = gauge_conjugate(B2, random_unitary(2, rng));
    if (wilson_vector(Bg, classes) != base) return false;
  }

  // (c) the two rank-1 characters are distinguished
  FlatBundle C1, C2;
  C1.rank = C2.rank = 1;
  C1.images = {{{GaussRat(Rat(1))}}, {{GaussRat(Rat(-1))}}};
  C2.images = {{{GaussRat(Rat(1))}}, {{GaussRat(Rat(1))}}};
  if (wilson_vector(C1, classes) == wilson_vector(C2, classes)) return false;

  // (d) |W(c)| <= rank, exactly on the squared norm
  for (int t = 0; t < 10; ++t) {
    int rank = 1 + int(rng() % 3);
    FlatBundle B;
    B.rank = rank;
    B.images = {random_unitary(rank, rng), random_unitary(rank, rng)};
    Rat bound = Rat(rank) * Rat(rank);
    for (const auto& e : classes)
      if (wilson_loop(B, e.word).norm2() > bound) return false;
  }

  // (e) simple spectrum. A rank-2 group forces tr(w) = tr(reversed w) for
  // every word, and reversal-distinct classes first occur at word length 5,
  // so the generic no-collision check runs on the complete length-4 list.
  auto short_classes = enumerate_classes(G, 4);
  if (!check_simple_length_spectrum(short_classes, kSpectrumTol).empty())
    return false;

  SchottkyGroup H;  // symmetric configuration: b = C a C^-1 shares a's trace
  RatMat2 A{Rat(3), Rat(0), Rat(0), Rat(1, 3)};
  RatMat2 Cm{Rat(1), Rat(1), Rat(1), Rat(2)}, Ci{Rat(2), Rat(-1), Rat(-1), Rat(1)};
  H.generators.push_back(A);
  H.generators.push_back(mat2_mul(mat2_mul(Cm, A), Ci));
  auto hcl = enumerate_classes(H, 2);
  auto coll = check_simple_length_spectrum(hcl, kSpectrumTol);
  bool found_ab = false;
  for (auto [i, j] : coll) {
    const Word &wi = hcl[i].word, &wj = hcl[j].word;
    if ((wi == Word{1} && wj == Word{2}) || (wi == Word{2} && wj == Word{1}))
      found_ab = true;
  }
  return found_ab;
}

bool criterion_trace_formula() {
  SchottkyGroup G = generic_group();
  auto classes = enumerate_classes(G, 8);
  std::mt19937_64 rng(13);
  FlatBundle B;
  B.rank = 2;
  B.images = {random_unitary(2, rng), random_unitary(2, rng)};

  bool saw_iterate = false;
  for (const auto& e : classes) {
    double ell = e.length;
    double ell_prim = geodesic_length(G, primitive_root(e.word));
    if (!e.primitive) saw_iterate = true;
    double det = std::abs((1 - std::exp(ell)) * (1 - std::exp(-ell)));
    GaussRat tr = wilson_loop(B, e.word);
    std::complex<double> trd(tr.re.get_d(), tr.im.get_d());
    std::complex<double> oracle = ell_prim * trd / (2 * M_PI * std::sqrt(det));
    std::complex<double> got = dg_coefficient(G, B, e);
    double denom = std::max(std::abs(oracle), 1e-300);
    if (std::abs(got - oracle) / denom > kDgRelTol) return false;
    // iterates must use the primitive length: with the full length instead
    // the value would differ by the factor ell / ell_prim
    if (!e.primitive && std::abs(trd) > 1e-6) {
      std::complex<double> wrong = ell * trd / (2 * M_PI * std::sqrt(det));
      if (std::abs(got - wrong) / std::abs(wrong) <= kDgRelTol) return false;
    }
  }
  return saw_iterate;
}

struct Criterion {
  const char* name;
  std::function<bool()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"1 q-table exact on [2,47], honest interval at 48", criterion_q_table},
      {"2 all witnesses verified, non-constant, chain degree 4", criterion_witnesses},
      {"3 clifford counts and normed identities exact to m=64", criterion_clifford},
      {"4 reflection/column/projector constructions verified", criterion_matrix_constructions},
      {"5 intertwiner isometry, equivariance, fiber-map extraction", criterion_hodge},
      {"6 exterior-power characters and middle-degree split", criterion_characters},
      {"7 harmonic decomposition and fourier degree", criterion_harmonics},
      {"8 wilson loops: triviality, gauge invariance, spectrum", criterion_wilson},
      {"9 trace-formula coefficient matches determinant oracle", criterion_trace_formula},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      std::fprintf(stderr, "criterion %s threw: %s\n", c.name, e.what());
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  criterion %s  (%.1fs)\n", ok ? "PASS" : "FAIL", c.name, secs);
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
