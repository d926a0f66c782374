#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace spherekit {

// Exact rational, arbitrary precision, always stored canonically
// (gcd(num, den) = 1, den > 0).
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& s);

// Canonical string: "p" when den == 1, else "p/q".
std::string rat_to_string(const Rat& q);

// Gaussian rational a + bi with exact rational parts.
struct GaussRat {
  Rat re;
  Rat im;

  GaussRat() : re(0), im(0) {}
  GaussRat(const Rat& r) : re(r), im(0) {}  // NOLINT: implicit by design
  GaussRat(long r) : re(r), im(0) {}        // NOLINT
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussRat conj() const { return {re, -im}; }
  Rat norm2() const { return re * re + im * im; }

  GaussRat operator-() const { return {-re, -im}; }
  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    Rat n = b.norm2();
    if (n == 0) throw std::domain_error("GaussRat: division by zero");
    GaussRat num = a * b.conj();
    return {num.re / n, num.im / n};
  }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

// Parses "p/q", "p/q+r/s i", "p/q-r/s i", "r/s i".
GaussRat parse_gauss(const std::string& s);
std::string gauss_to_string(const GaussRat& z);

// Coefficient-field glue used by the polynomial and exterior-algebra
// templates.
template <typename K>
struct FieldOps;

template <>
struct FieldOps<Rat> {
  static constexpr bool is_complex = false;
  static bool is_zero(const Rat& x) { return x == 0; }
  static Rat conj(const Rat& x) { return x; }
  static Rat from_int(long n) { return Rat(n); }
  static std::string str(const Rat& x) { return rat_to_string(x); }
  static Rat parse(const std::string& s) { return parse_rat(s); }
};

template <>
struct FieldOps<GaussRat> {
  static constexpr bool is_complex = true;
  static bool is_zero(const GaussRat& x) { return x.is_zero(); }
  static GaussRat conj(const GaussRat& x) { return x.conj(); }
  static GaussRat from_int(long n) { return GaussRat(Rat(n)); }
  static std::string str(const GaussRat& x) { return gauss_to_string(x); }
  static GaussRat parse(const std::string& s) { return parse_gauss(s); }
};

// Floor of the exact integer square root of a non-negative integer.
long isqrt_floor(long n);

}  // namespace spherekit
