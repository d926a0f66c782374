#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spherekit/rational.hpp"

namespace spherekit {

// Exponent vector, one byte per variable, packed into 64-bit words.
// Degrees stay small (<= 8 in practice) so byte-wise addition never
// carries; sum() checks this and throws on exponent overflow.
class Mono {
 public:
  Mono() = default;
  explicit Mono(int nvars) : w_((nvars + 7) / 8, 0) {}

  unsigned get(int i) const { return (w_[i >> 3] >> ((i & 7) * 8)) & 0xff; }
  void set(int i, unsigned e) {
    if (e > 0xff) throw std::overflow_error("Mono: exponent too large");
    std::uint64_t mask = std::uint64_t(0xff) << ((i & 7) * 8);
    w_[i >> 3] = (w_[i >> 3] & ~mask) | (std::uint64_t(e) << ((i & 7) * 8));
  }

  int deg() const {
    int d = 0;
    for (std::uint64_t x : w_)
      while (x) {
        d += int(x & 0xff);
        x >>= 8;
      }
    return d;
  }

  static Mono sum(const Mono& a, const Mono& b) {
    Mono r = a;
    for (std::size_t j = 0; j < r.w_.size(); ++j) {
      if (((a.w_[j] | b.w_[j]) & 0x8080808080808080ULL) != 0)
        throw std::overflow_error("Mono: exponent overflow in product");
      r.w_[j] += b.w_[j];
    }
    return r;
  }

  bool operator==(const Mono& o) const { return w_ == o.w_; }
  bool operator!=(const Mono& o) const { return w_ != o.w_; }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t x : w_) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xbf58476d1ce4e5b9ULL;
      h ^= h >> 27;
    }
    return std::size_t(h);
  }

  // Graded lexicographic: total degree first, then variable 0, 1, ...
  static bool graded_lex_less(const Mono& a, const Mono& b, int nvars) {
    int da = a.deg(), db = b.deg();
    if (da != db) return da < db;
    for (int i = 0; i < nvars; ++i) {
      unsigned ea = a.get(i), eb = b.get(i);
      if (ea != eb) return ea > eb;  // earlier variable, higher power first
    }
    return false;
  }

 private:
  std::vector<std::uint64_t> w_;
};

struct MonoHash {
  std::size_t operator()(const Mono& m) const { return m.hash(); }
};

// Sparse multivariate polynomial with exact coefficients (K = Rat or
// GaussRat). Zero coefficients are never stored.
template <typename K>
class MultiPoly {
 public:
  using Terms = std::unordered_map<Mono, K, MonoHash>;

  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const K& c) {
    MultiPoly p(nvars);
    p.add_term(Mono(nvars), c);
    return p;
  }
  static MultiPoly variable(int nvars, int i, int power = 1) {
    if (i < 0 || i >= nvars) throw std::out_of_range("MultiPoly::variable");
    MultiPoly p(nvars);
    Mono m(nvars);
    m.set(i, power);
    p.add_term(m, FieldOps<K>::from_int(1));
    return p;
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  int total_degree() const {  // -1 for the zero polynomial
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.deg());
    return d;
  }
  int degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, int(m.get(var)));
    return d;
  }

  void add_term(const Mono& m, const K& c) {
    if (FieldOps<K>::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (FieldOps<K>::is_zero(it->second)) terms_.erase(it);
    }
  }

  K coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K() : it->second;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  MultiPoly operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  MultiPoly& operator*=(const K& s) {
    if (FieldOps<K>::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend MultiPoly operator*(MultiPoly a, const K& s) { return a *= s; }
  friend MultiPoly operator*(const K& s, MultiPoly a) { return a *= s; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_vars(b);
    return multiply(a, b);
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  bool operator==(const MultiPoly& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    for (const auto& [m, c] : terms_) {
      auto it = o.terms_.find(m);
      if (it == o.terms_.end() || !(it->second == c)) return false;
    }
    return true;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // Terms in descending graded-lex order; the canonical form used for
  // serialization and printing.
  std::vector<std::pair<Mono, K>> sorted_terms() const {
    std::vector<std::pair<Mono, K>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [this](const auto& a, const auto& b) {
      return Mono::graded_lex_less(b.first, a.first, nvars_);
    });
    return v;
  }

  K eval(const std::vector<K>& point) const {
    if (int(point.size()) != nvars_) throw std::invalid_argument("eval: arity");
    // per-variable power cache
    std::vector<std::vector<K>> pw(nvars_);
    for (int i = 0; i < nvars_; ++i) pw[i].push_back(FieldOps<K>::from_int(1));
    K acc = K();
    for (const auto& [m, c] : terms_) {
      K t = c;
      for (int i = 0; i < nvars_; ++i) {
        unsigned e = m.get(i);
        if (!e) continue;
        auto& p = pw[i];
        while (p.size() <= e) p.push_back(p.back() * point[i]);
        t *= p[e];
      }
      acc += t;
    }
    return acc;
  }

  // Composition: one replacement polynomial per variable of *this.
  MultiPoly substitute(const std::vector<MultiPoly>& subs) const {
    if (int(subs.size()) != nvars_)
      throw std::invalid_argument("substitute: one polynomial per variable required");
    int out_vars = subs.empty() ? 0 : subs[0].nvars();
    for (const auto& s : subs)
      if (s.nvars() != out_vars) throw std::invalid_argument("substitute: mixed arities");
    std::vector<std::vector<MultiPoly>> pw(nvars_);
    for (int i = 0; i < nvars_; ++i)
      pw[i].push_back(MultiPoly::constant(out_vars, FieldOps<K>::from_int(1)));
    MultiPoly acc(out_vars);
    for (const auto& [m, c] : terms_) {
      MultiPoly t = MultiPoly::constant(out_vars, c);
      for (int i = 0; i < nvars_; ++i) {
        unsigned e = m.get(i);
        if (!e) continue;
        auto& p = pw[i];
        while (p.size() <= e) p.push_back(p.back() * subs[i]);
        t = t * p[e];
      }
      acc += t;
    }
    return acc;
  }

  MultiPoly derivative(int var) const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
      unsigned e = m.get(var);
      if (!e) continue;
      Mono d = m;
      d.set(var, e - 1);
      r.add_term(d, c * FieldOps<K>::from_int(long(e)));
    }
    return r;
  }

  // Drops a variable that no longer occurs, remapping indices above it.
  MultiPoly drop_variable(int var) const {
    if (degree_in(var) != 0)
      throw std::invalid_argument("drop_variable: variable still occurs");
    MultiPoly r(nvars_ - 1);
    for (const auto& [m, c] : terms_) {
      Mono d(nvars_ - 1);
      for (int i = 0, j = 0; i < nvars_; ++i) {
        if (i == var) continue;
        d.set(j++, m.get(i));
      }
      r.terms_.emplace(d, c);
    }
    return r;
  }

  // Sets one variable to zero (cheap: drops terms containing it).
  MultiPoly set_var_zero(int var) const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_)
      if (m.get(var) == 0) r.terms_.emplace(m, c);
    return r;
  }

  MultiPoly conjugate() const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, FieldOps<K>::conj(c));
    return r;
  }

  bool is_constant_poly() const { return total_degree() <= 0; }
  K constant_value() const { return coeff(Mono(nvars_)); }

  // Splits into homogeneous parts indexed by total degree.
  std::vector<MultiPoly> homogeneous_parts() const {
    int d = total_degree();
    std::vector<MultiPoly> parts(std::size_t(std::max(d + 1, 0)), MultiPoly(nvars_));
    for (const auto& [m, c] : terms_) parts[m.deg()].terms_.emplace(m, c);
    return parts;
  }

 private:
  void check_vars(const MultiPoly& o) const {
    if (nvars_ != o.nvars_)
      throw std::invalid_argument("MultiPoly: variable-count mismatch");
  }

  static MultiPoly multiply(const MultiPoly& a, const MultiPoly& b);

  int nvars_;
  Terms terms_;
};

using Poly = MultiPoly<Rat>;
using CPoly = MultiPoly<GaussRat>;

CPoly to_complex(const Poly& p);
// Throws if any coefficient has a nonzero imaginary part.
Poly to_real(const CPoly& p);

// The ring R[v_1..v_{n+1}] / <v_1^2 + ... + v_{n+1}^2 - 1>. Normal forms
// have degree <= 1 in the last variable.
struct SphereContext {
  int nvars;  // n + 1 ambient coordinates for S^n

  explicit SphereContext(int nv) : nvars(nv) {
    if (nv < 1) throw std::invalid_argument("SphereContext: nvars >= 1 required");
  }
  int sphere_dim() const { return nvars - 1; }

  template <typename K>
  MultiPoly<K> ideal_generator() const {
    MultiPoly<K> g(nvars);
    for (int i = 0; i < nvars; ++i) {
      Mono m(nvars);
      m.set(i, 2);
      g.add_term(m, FieldOps<K>::from_int(1));
    }
    g.add_term(Mono(nvars), FieldOps<K>::from_int(-1));
    return g;
  }
};

// Canonical representative of p modulo the sphere ideal: substitute
// v_last^2 -> 1 - sum of the other squares, Horner-style in v_last.
template <typename K>
MultiPoly<K> nf_reduce(const MultiPoly<K>& p, const SphereContext& ctx);

extern template MultiPoly<Rat> nf_reduce(const MultiPoly<Rat>&, const SphereContext&);
extern template MultiPoly<GaussRat> nf_reduce(const MultiPoly<GaussRat>&, const SphereContext&);

// nf_reduce(sum of squares of coords - 1); the verification residual of a
// candidate sphere map. For complex coords the square is coord * conj(coord).
Poly sphere_residual(const std::vector<Poly>& coords, const SphereContext& ctx);

std::string poly_to_string(const Poly& p, const std::string& var_prefix = "v");
std::string poly_to_string(const CPoly& p, const std::string& var_prefix = "v");

}  // namespace spherekit
