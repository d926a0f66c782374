#include "spherekit/harmonics.hpp"

#include <map>
#include <stdexcept>

namespace spherekit {

Poly laplacian(const Poly& p) {
  Poly r(p.nvars());
  for (int i = 0; i < p.nvars(); ++i) r += p.derivative(i).derivative(i);
  return r;
}

namespace {

Poly radius_sq(int nvars) {
  Poly r(nvars);
  for (int i = 0; i < nvars; ++i) {
    Mono m(nvars);
    m.set(i, 2);
    r.add_term(m, Rat(1));
  }
  return r;
}

bool is_homogeneous(const Poly& p, int d) {
  for (const auto& [m, c] : p.terms())
    if (m.deg() != d) return false;
  return true;
}

}  // namespace

HarmonicDecomposition harmonic_decompose(const Poly& p) {
  int d = p.total_degree();
  HarmonicDecomposition out;
  out.degree = std::max(d, 0);
  if (p.is_zero()) return out;
  if (!is_homogeneous(p, d))
    throw std::invalid_argument("harmonic_decompose: input not homogeneous");
  if (d <= 1) {
    out.components.push_back({0, p});
    return out;
  }
  // Laplacian of |v|^{2k} h_e is c_k |v|^{2k-2} h_e with
  // c_k = 2k(2k + 2e + m - 2), e = d - 2k: decompose Delta p recursively,
  // divide component k-1 by c_k, and recover the top harmonic part by
  // subtraction. This is the unique classical decomposition, entirely in
  // rational arithmetic.
  int m = p.nvars();
  HarmonicDecomposition lower = harmonic_decompose(laplacian(p));
  Poly r2 = radius_sq(m);
  Poly top = p;
  Poly r2k = Poly::constant(m, Rat(1));
  int kcur = 0;
  for (const auto& comp : lower.components) {
    int k = comp.k + 1;
    long ck = 2L * k * (m + 2L * d - 2 * k - 2);
    Poly h = comp.h * Rat(1, ck);
    while (kcur < k) {
      r2k *= r2;
      ++kcur;
    }
    top -= r2k * h;
    out.components.push_back({k, std::move(h)});
  }
  if (!top.is_zero())
    out.components.insert(out.components.begin(), {0, std::move(top)});
  return out;
}

int fourier_degree(const Poly& p, const SphereContext& ctx) {
  Poly q = nf_reduce(p, ctx);
  if (q.is_zero()) return 0;
  // Harmonic components of the same degree coming from different
  // homogeneous parts can cancel on the sphere (|v|^{2k} h and h restrict
  // identically), so sum them per degree before testing for zero.
  std::map<int, Poly> by_degree;
  for (const auto& part : q.homogeneous_parts()) {
    if (part.is_zero()) continue;
    for (const auto& comp : harmonic_decompose(part).components) {
      int deg = comp.h.total_degree();
      by_degree.try_emplace(deg, ctx.nvars).first->second += comp.h;
    }
  }
  int best = 0;
  for (const auto& [deg, h] : by_degree)
    if (!h.is_zero()) best = std::max(best, deg);
  return best;
}

int fourier_degree(const CPoly& p, const SphereContext& ctx) {
  Poly re(p.nvars()), im(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    re.add_term(m, c.re);
    im.add_term(m, c.im);
  }
  return std::max(fourier_degree(re, ctx), fourier_degree(im, ctx));
}

int map_fourier_degree(const SphereMap& F) {
  SphereContext ctx = F.source_ctx();
  int d = 0;
  for (const auto& c : F.coords) d = std::max(d, fourier_degree(c, ctx));
  return d;
}

int map_fourier_degree(const MatrixPolyMap& M) {
  SphereContext ctx = M.source_ctx();
  int d = 0;
  for (const auto& e : M.entries) d = std::max(d, fourier_degree(e, ctx));
  return d;
}

}  // namespace spherekit
