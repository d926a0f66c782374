#include "spherekit/poly.hpp"

#include <limits>

namespace spherekit {

namespace {

constexpr long kSafeBound = long(1) << 62;

// Small-integer snapshot of a polynomial for the int64 kernel; valid only
// when every coefficient is an integer of modest size.
struct IntView {
  std::vector<std::pair<Mono, long>> terms;
  long max_abs = 0;
  bool ok = false;
};

IntView int_view(const Poly& p) {
  IntView v;
  v.terms.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    if (c.get_den() != 1) return v;
    const mpz_class& num = c.get_num();
    if (!num.fits_slong_p()) return v;
    long n = num.get_si();
    if (n == std::numeric_limits<long>::min()) return v;
    v.terms.emplace_back(m, n);
    v.max_abs = std::max(v.max_abs, std::labs(n));
  }
  v.ok = true;
  return v;
}

Poly from_int_terms(int nvars, const std::unordered_map<Mono, long, MonoHash>& acc) {
  Poly r(nvars);
  for (const auto& [m, c] : acc)
    if (c != 0) r.add_term(m, Rat(c));
  return r;
}

}  // namespace

template <typename K>
MultiPoly<K> MultiPoly<K>::multiply(const MultiPoly& a, const MultiPoly& b) {
  if constexpr (std::is_same_v<K, Rat>) {
    // int64 fast path for large products with small integer coefficients
    if (a.size() * b.size() > 4096) {
      IntView va = int_view(a), vb = int_view(b);
      if (va.ok && vb.ok && va.max_abs > 0 && vb.max_abs > 0) {
        double bound = double(va.max_abs) * double(vb.max_abs) *
                       double(std::min(a.size(), b.size()));
        if (bound < double(kSafeBound)) {
          std::unordered_map<Mono, long, MonoHash> acc;
          acc.reserve(a.size() + b.size());
          for (const auto& [ma, ca] : va.terms)
            for (const auto& [mb, cb] : vb.terms) acc[Mono::sum(ma, mb)] += ca * cb;
          return from_int_terms(a.nvars_, acc);
        }
      }
    }
  }
  MultiPoly r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(Mono::sum(ma, mb), ca * cb);
  return r;
}

template class MultiPoly<Rat>;
template class MultiPoly<GaussRat>;

CPoly to_complex(const Poly& p) {
  CPoly r(p.nvars());
  for (const auto& [m, c] : p.terms()) r.add_term(m, GaussRat(c));
  return r;
}

Poly to_real(const CPoly& p) {
  Poly r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (c.im != 0) throw std::invalid_argument("to_real: nonzero imaginary part");
    r.add_term(m, c.re);
  }
  return r;
}

template <typename K>
MultiPoly<K> nf_reduce(const MultiPoly<K>& p, const SphereContext& ctx) {
  if (p.nvars() != ctx.nvars)
    throw std::invalid_argument("nf_reduce: variable-count mismatch");
  const int last = ctx.nvars - 1;
  int dmax = p.degree_in(last);
  if (dmax <= 1) return p;

  std::vector<MultiPoly<K>> A(dmax + 1, MultiPoly<K>(ctx.nvars));
  for (const auto& [m, c] : p.terms()) {
    unsigned e = m.get(last);
    Mono s = m;
    s.set(last, 0);
    A[e].add_term(s, c);
  }

  // g = 1 - sum_{i < last} v_i^2, so v_last^2 == g mod the ideal.
  MultiPoly<K> g = MultiPoly<K>::constant(ctx.nvars, FieldOps<K>::from_int(1));
  for (int i = 0; i < last; ++i) {
    Mono m(ctx.nvars);
    m.set(i, 2);
    g.add_term(m, FieldOps<K>::from_int(-1));
  }

  int top_even = dmax - (dmax % 2);
  int top_odd = (dmax % 2) ? dmax : dmax - 1;

  MultiPoly<K> even = A[top_even];
  for (int k = top_even - 2; k >= 0; k -= 2) even = even * g + A[k];
  MultiPoly<K> odd(ctx.nvars);
  if (top_odd >= 1) {
    odd = A[top_odd];
    for (int k = top_odd - 2; k >= 1; k -= 2) odd = odd * g + A[k];
  }

  MultiPoly<K> result = even;
  for (const auto& [m, c] : odd.terms()) {
    Mono s = m;
    s.set(last, 1);
    result.add_term(s, c);
  }
  return result;
}

template MultiPoly<Rat> nf_reduce(const MultiPoly<Rat>&, const SphereContext&);
template MultiPoly<GaussRat> nf_reduce(const MultiPoly<GaussRat>&, const SphereContext&);

Poly sphere_residual(const std::vector<Poly>& coords, const SphereContext& ctx) {
  for (const auto& c : coords)
    if (c.nvars() != ctx.nvars)
      throw std::invalid_argument("sphere_residual: variable-count mismatch");

  // Try the int64 kernel: accumulate all squares into one map.
  bool fast_ok = true;
  double bound = 0;
  std::vector<IntView> views;
  views.reserve(coords.size());
  for (const auto& c : coords) {
    views.push_back(int_view(c));
    if (!views.back().ok) {
      fast_ok = false;
      break;
    }
    const IntView& v = views.back();
    bound += double(v.terms.size()) * double(v.max_abs) * double(v.max_abs);
  }

  Poly s(ctx.nvars);
  if (fast_ok && bound < double(kSafeBound)) {
    std::unordered_map<Mono, long, MonoHash> acc;
    for (const IntView& v : views) {
      const auto& t = v.terms;
      for (std::size_t i = 0; i < t.size(); ++i) {
        acc[Mono::sum(t[i].first, t[i].first)] += t[i].second * t[i].second;
        for (std::size_t j = i + 1; j < t.size(); ++j)
          acc[Mono::sum(t[i].first, t[j].first)] += 2 * t[i].second * t[j].second;
      }
    }
    s = from_int_terms(ctx.nvars, acc);
  } else {
    for (const auto& c : coords) s += c * c;
  }
  s.add_term(Mono(ctx.nvars), Rat(-1));
  return nf_reduce(s, ctx);
}

namespace {

template <typename K>
std::string poly_to_string_impl(const MultiPoly<K>& p, const std::string& var_prefix) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.sorted_terms()) {
    if (!out.empty()) out += " + ";
    std::string cs = FieldOps<K>::str(c);
    bool need_coeff = (m.deg() == 0) || cs != "1";
    if (need_coeff) {
      if (cs.find_first_of("+- ") != std::string::npos && cs != "-1" &&
          !(cs[0] == '-' && cs.find_first_of("+- ", 1) == std::string::npos))
        cs = "(" + cs + ")";
      out += cs;
    }
    for (int i = 0; i < p.nvars(); ++i) {
      unsigned e = m.get(i);
      if (!e) continue;
      if (out.back() != ' ' && need_coeff) out += " ";
      need_coeff = true;  // separator from now on
      out += var_prefix + std::to_string(i + 1);
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace

std::string poly_to_string(const Poly& p, const std::string& var_prefix) {
  return poly_to_string_impl(p, var_prefix);
}
std::string poly_to_string(const CPoly& p, const std::string& var_prefix) {
  return poly_to_string_impl(p, var_prefix);
}

}  // namespace spherekit
