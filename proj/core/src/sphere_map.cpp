#include "spherekit/sphere_map.hpp"

#include <map>
#include <stdexcept>

namespace spherekit {

std::string group_tag_name(GroupTag g) {
  switch (g) {
    case GroupTag::SO: return "SO";
    case GroupTag::O: return "O";
    case GroupTag::U: return "U";
    case GroupTag::SU: return "SU";
  }
  return "?";
}

GroupTag group_tag_from_name(const std::string& s) {
  if (s == "SO") return GroupTag::SO;
  if (s == "O") return GroupTag::O;
  if (s == "U") return GroupTag::U;
  if (s == "SU") return GroupTag::SU;
  throw std::invalid_argument("unknown group tag: " + s);
}

int SphereMap::degree_repr() const {
  int d = 0;
  for (const auto& c : coords) d = std::max(d, c.total_degree());
  return d;
}

SphereMap SphereMap::identity(int n) {
  SphereMap F;
  F.source_dim = n;
  F.target_dim = n;
  for (int i = 0; i < n + 1; ++i) F.coords.push_back(Poly::variable(n + 1, i));
  return F;
}

SphereMap SphereMap::constant(int n, int r) {
  SphereMap F;
  F.source_dim = n;
  F.target_dim = r;
  F.coords.push_back(Poly::constant(n + 1, Rat(1)));
  for (int i = 1; i < r + 1; ++i) F.coords.emplace_back(n + 1);
  return F;
}

VerifyReport verify_sphere_map(const SphereMap& F) {
  VerifyReport rep;
  if (int(F.coords.size()) != F.target_dim + 1) {
    rep.detail = "coordinate count does not match target dimension";
    return rep;
  }
  SphereContext ctx = F.source_ctx();
  for (const auto& c : F.coords)
    if (c.nvars() != ctx.nvars)
      throw std::invalid_argument("verify_sphere_map: variable-count mismatch");
  if (!F.factors.empty()) {
    // Composition: residual(B after A) = (sum B_i^2 - 1) pulled back along A
    // = (h after A) * (sum A_j^2 - 1) once B verifies, so it vanishes mod the
    // source ideal exactly when every factor verifies. Avoids squaring the
    // (large) composed coordinates.
    for (std::size_t k = 0; k < F.factors.size(); ++k) {
      VerifyReport fr = verify_sphere_map(*F.factors[k]);
      if (!fr.pass) {
        rep.residual = std::move(fr.residual);
        rep.detail = "composition factor " + std::to_string(k) +
                     " fails: " + fr.detail;
        return rep;
      }
    }
    rep.pass = true;
    rep.residual = Poly(ctx.nvars);
    rep.detail = "verified via composition factors";
    return rep;
  }
  rep.residual = sphere_residual(F.coords, ctx);
  rep.pass = rep.residual.is_zero();
  if (!rep.pass) rep.detail = "nonzero residual: " + poly_to_string(rep.residual);
  return rep;
}

bool MatrixPolyMap::is_real() const {
  for (const auto& e : entries)
    for (const auto& [m, c] : e.terms())
      if (c.im != 0) return false;
  return true;
}

int MatrixPolyMap::degree_repr() const {
  int d = 0;
  for (const auto& e : entries) d = std::max(d, e.total_degree());
  return d;
}

namespace {

// Determinant mod the sphere ideal: Laplace expansion along the last row,
// memoized over column subsets, NF-reducing every minor to keep sizes down.
CPoly det_nf_impl(const MatrixPolyMap& M, const SphereContext& ctx) {
  const int n = M.size;
  std::map<std::uint64_t, CPoly> memo;  // bitmask of columns -> minor det
  memo[0] = CPoly::constant(ctx.nvars, GaussRat(Rat(1)));

  // Iterate over subsets by popcount: minor uses rows 0..k-1 and the
  // columns in the mask.
  std::vector<std::vector<std::uint64_t>> by_count(n + 1);
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask)
    by_count[__builtin_popcountll(mask)].push_back(mask);

  for (int k = 1; k <= n; ++k) {
    for (std::uint64_t mask : by_count[k]) {
      CPoly acc(ctx.nvars);
      // Expansion along row k-1 of the minor: sign of column position t
      // is (-1)^{(k-1)+t}.
      int sign = (k % 2 == 1) ? 1 : -1;
      for (int j = 0; j < n; ++j) {
        if (!(mask & (std::uint64_t(1) << j))) continue;
        const CPoly& entry = M.at(k - 1, j);
        if (!entry.is_zero()) {
          CPoly term = entry * memo.at(mask ^ (std::uint64_t(1) << j));
          if (sign < 0) term *= GaussRat(Rat(-1));
          acc += term;
        }
        sign = -sign;
      }
      memo[mask] = nf_reduce(acc, ctx);
    }
  }
  return memo.at((std::uint64_t(1) << n) - 1);
}

}  // namespace

MatrixVerifyReport verify_matrix_map(const MatrixPolyMap& M) {
  MatrixVerifyReport rep;
  if (int(M.entries.size()) != M.size * M.size)
    throw std::invalid_argument("verify_matrix_map: entry count");
  SphereContext ctx = M.source_ctx();

  // D = M^* M - I, entrywise NF; all entries must vanish.
  rep.orthogonality_ok = true;
  CPoly norm_acc(ctx.nvars);
  for (int i = 0; i < M.size; ++i) {
    for (int j = 0; j < M.size; ++j) {
      CPoly d(ctx.nvars);
      for (int k = 0; k < M.size; ++k) d += M.at(k, i).conjugate() * M.at(k, j);
      if (i == j) d.add_term(Mono(ctx.nvars), GaussRat(Rat(-1)));
      d = nf_reduce(d, ctx);
      if (!d.is_zero()) {
        rep.orthogonality_ok = false;
        norm_acc += d * d.conjugate();
      }
    }
  }
  rep.residual_norm = to_real(nf_reduce(norm_acc, ctx));

  rep.det_nf = det_nf_impl(M, ctx);
  rep.det_constant = rep.det_nf.is_constant_poly();
  GaussRat dv = rep.det_nf.constant_value();
  rep.det_is_one = rep.det_constant && dv == GaussRat(Rat(1));

  switch (M.group) {
    case GroupTag::SO:
    case GroupTag::SU:
      rep.pass = rep.orthogonality_ok && rep.det_is_one;
      break;
    case GroupTag::O:
      rep.pass = rep.orthogonality_ok;
      break;
    case GroupTag::U:
      // det: S^n -> U(1) is polynomial, hence constant for verified maps
      // with n >= 2; require |det| = 1.
      rep.pass = rep.orthogonality_ok && rep.det_constant && dv.norm2() == 1;
      break;
  }
  if (!rep.orthogonality_ok) rep.detail = "orthogonality/unitarity fails mod ideal";
  else if (!rep.pass) rep.detail = "determinant not the expected constant";
  return rep;
}

ProjectorVerifyReport verify_projector_map(const ProjectorMap& P) {
  ProjectorVerifyReport rep;
  SphereContext ctx(P.source_dim + 1);
  rep.idempotent = true;
  rep.symmetric = true;
  for (int i = 0; i < P.ambient; ++i) {
    for (int j = 0; j < P.ambient; ++j) {
      Poly sq(ctx.nvars);
      for (int k = 0; k < P.ambient; ++k) sq += P.at(i, k) * P.at(k, j);
      if (!nf_reduce(sq - P.at(i, j), ctx).is_zero()) rep.idempotent = false;
      if (!nf_reduce(P.at(i, j) - P.at(j, i), ctx).is_zero()) rep.symmetric = false;
    }
  }
  Poly tr(ctx.nvars);
  for (int i = 0; i < P.ambient; ++i) tr += P.at(i, i);
  tr.add_term(Mono(ctx.nvars), Rat(-P.rank));
  rep.trace_ok = nf_reduce(tr, ctx).is_zero();
  rep.pass = rep.idempotent && rep.symmetric && rep.trace_ok;
  return rep;
}

bool is_constant(const SphereMap& F) {
  SphereContext ctx = F.source_ctx();
  for (const auto& c : F.coords)
    if (!nf_reduce(c, ctx).is_constant_poly()) return false;
  return true;
}

bool is_constant(const MatrixPolyMap& M) {
  SphereContext ctx = M.source_ctx();
  for (const auto& e : M.entries)
    if (!nf_reduce(e, ctx).is_constant_poly()) return false;
  return true;
}

SphereMap compose(const SphereMap& F, const SphereMap& G) {
  if (F.target_dim != G.source_dim)
    throw std::invalid_argument("compose: dimension mismatch");
  SphereMap R;
  R.source_dim = F.source_dim;
  R.target_dim = G.target_dim;
  R.coords.reserve(G.coords.size());
  for (const auto& g : G.coords) R.coords.push_back(g.substitute(F.coords));
  if (F.factors.empty())
    R.factors.push_back(std::make_shared<SphereMap>(F));
  else
    R.factors = F.factors;
  if (G.factors.empty())
    R.factors.push_back(std::make_shared<SphereMap>(G));
  else
    R.factors.insert(R.factors.end(), G.factors.begin(), G.factors.end());
  return R;
}

SphereMap equatorial_inclusion(int n) {
  SphereMap F = SphereMap::identity(n);
  F.target_dim = n + 1;
  F.coords.emplace_back(n + 1);
  return F;
}

SphereMap restrict_to_great_sphere(const SphereMap& F, int i) {
  if (i < 1 || i > F.source_dim + 1)
    throw std::out_of_range("restrict_to_great_sphere: index");
  if (F.source_dim < 1)
    throw std::invalid_argument("restrict_to_great_sphere: S^0 source");
  SphereMap R;
  R.source_dim = F.source_dim - 1;
  R.target_dim = F.target_dim;
  for (const auto& c : F.coords)
    R.coords.push_back(c.set_var_zero(i - 1).drop_variable(i - 1));
  if (!F.factors.empty()) {
    // Restriction commutes with composition: only the innermost factor sees
    // the source sphere, so restrict it and keep the outer factors.
    R.factors.push_back(std::make_shared<SphereMap>(
        restrict_to_great_sphere(*F.factors.front(), i)));
    R.factors.insert(R.factors.end(), F.factors.begin() + 1, F.factors.end());
  }
  return R;
}

MatrixPolyMap reflection_map(int r, bool complex_field) {
  if (r < 1) throw std::invalid_argument("reflection_map: r >= 1 required");
  MatrixPolyMap M;
  M.size = r + 1;
  const GaussRat sgn(Rat(r % 2 == 0 ? 1 : -1));
  if (!complex_field) {
    M.source_dim = r;
    M.group = GroupTag::SO;
    int nv = r + 1;
    for (int i = 0; i <= r; ++i) {
      for (int j = 0; j <= r; ++j) {
        CPoly e(nv);
        Mono m(nv);
        if (i == j) {
          m.set(i, 2);
          e.add_term(m, GaussRat(Rat(2)));
          e.add_term(Mono(nv), GaussRat(Rat(-1)));
        } else {
          m.set(i, 1);
          m.set(j, 1);
          e.add_term(m, GaussRat(Rat(2)));
        }
        M.entries.push_back(e * sgn);
      }
    }
  } else {
    M.source_dim = 2 * r + 1;
    M.group = GroupTag::SU;
    int nv = 2 * r + 2;
    // z_i = v_{2i+1} + i v_{2i+2} (0-based vars 2i, 2i+1)
    auto re_var = [&](int i) { return 2 * i; };
    auto im_var = [&](int i) { return 2 * i + 1; };
    for (int i = 0; i <= r; ++i) {
      for (int j = 0; j <= r; ++j) {
        // 2 z_i conj(z_j) - delta_ij
        CPoly e(nv);
        auto add = [&](int va, int vb, const GaussRat& c) {
          Mono m(nv);
          if (va == vb) m.set(va, 2);
          else {
            m.set(va, 1);
            m.set(vb, 1);
          }
          e.add_term(m, c);
        };
        add(re_var(i), re_var(j), GaussRat(Rat(2)));
        add(im_var(i), im_var(j), GaussRat(Rat(2)));
        add(im_var(i), re_var(j), GaussRat(Rat(0), Rat(2)));
        add(re_var(i), im_var(j), GaussRat(Rat(0), Rat(-2)));
        if (i == j) e.add_term(Mono(nv), GaussRat(Rat(-1)));
        M.entries.push_back(e * sgn);
      }
    }
  }
  if (r % 2 == 1) {
    // det == (-1)^r regardless of the scalar sign; fix it with the constant
    // isometry diag(-1, 1, ..., 1) on the target.
    for (int j = 0; j <= r; ++j) M.at(0, j) *= GaussRat(Rat(-1));
  }
  return M;
}

SphereMap column_map(const MatrixPolyMap& M, int j) {
  if (j < 1 || j > M.size) throw std::out_of_range("column_map: column index");
  SphereMap F;
  F.source_dim = M.source_dim;
  if (M.is_real()) {
    F.target_dim = M.size - 1;
    for (int i = 0; i < M.size; ++i) F.coords.push_back(to_real(M.at(i, j - 1)));
  } else {
    // realify: (re, im) per entry, landing on S^{2r-1}
    F.target_dim = 2 * M.size - 1;
    for (int i = 0; i < M.size; ++i) {
      const CPoly& e = M.at(i, j - 1);
      Poly re(e.nvars()), im(e.nvars());
      for (const auto& [m, c] : e.terms()) {
        re.add_term(m, c.re);
        im.add_term(m, c.im);
      }
      F.coords.push_back(std::move(re));
      F.coords.push_back(std::move(im));
    }
  }
  return F;
}

ProjectorMap grassmannian_projector_map(const SphereMap& F, int ambient) {
  if (ambient < F.target_dim + 1)
    throw std::invalid_argument("grassmannian_projector_map: ambient too small");
  ProjectorMap P;
  P.source_dim = F.source_dim;
  P.ambient = ambient;
  P.rank = 1;
  int nv = F.source_dim + 1;
  for (int i = 0; i < ambient; ++i)
    for (int j = 0; j < ambient; ++j) {
      if (i <= F.target_dim && j <= F.target_dim)
        P.entries.push_back(F.coords[i] * F.coords[j]);
      else
        P.entries.emplace_back(nv);
    }
  return P;
}

bool maps_equal_nf(const SphereMap& F, const SphereMap& G) {
  if (F.source_dim != G.source_dim || F.target_dim != G.target_dim) return false;
  SphereContext ctx = F.source_ctx();
  for (std::size_t i = 0; i < F.coords.size(); ++i)
    if (nf_reduce(F.coords[i], ctx) != nf_reduce(G.coords[i], ctx)) return false;
  return true;
}

std::vector<Rat> eval_map(const SphereMap& F, const std::vector<Rat>& point) {
  std::vector<Rat> out;
  out.reserve(F.coords.size());
  for (const auto& c : F.coords) out.push_back(c.eval(point));
  return out;
}

}  // namespace spherekit
