#include "spherekit/rational.hpp"

#include <cctype>

namespace spherekit {

Rat parse_rat(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  if (t.empty()) throw std::invalid_argument("parse_rat: empty string");
  Rat q;
  if (q.set_str(t, 10) != 0)
    throw std::invalid_argument("parse_rat: malformed rational '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("parse_rat: zero denominator");
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  return c.get_str();
}

GaussRat parse_gauss(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("parse_gauss: empty string");
  bool has_i = !t.empty() && t.back() == 'i';
  if (!has_i) return GaussRat(parse_rat(t));
  t.pop_back();
  // Split "re±im" at the last +/- that is not a leading sign and not part
  // of a denominator. Both parts are plain rationals so scanning from the
  // end for +/- outside position 0 suffices.
  for (std::size_t pos = t.size(); pos-- > 1;) {
    if ((t[pos] == '+' || t[pos] == '-') && t[pos - 1] != '/') {
      std::string re = t.substr(0, pos);
      std::string im = t.substr(pos);
      if (im == "+" || im == "-") im += "1";
      return {parse_rat(re), parse_rat(im)};
    }
  }
  if (t.empty() || t == "+") return {Rat(0), Rat(1)};
  if (t == "-") return {Rat(0), Rat(-1)};
  return {Rat(0), parse_rat(t)};
}

std::string gauss_to_string(const GaussRat& z) {
  if (z.im == 0) return rat_to_string(z.re);
  std::string s = rat_to_string(z.re);
  if (z.im > 0) s += "+";
  s += rat_to_string(z.im) + " i";
  return s;
}

long isqrt_floor(long n) {
  if (n < 0) throw std::domain_error("isqrt_floor: negative input");
  mpz_class z(n), r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r.get_si();
}

}  // namespace spherekit
