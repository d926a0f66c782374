#include <doctest.h>

#include <random>

#include "spherekit/points.hpp"
#include "spherekit/poly.hpp"

using namespace spherekit;

namespace {

Poly monomial(int nvars, std::initializer_list<int> exps, Rat c) {
  Mono m(nvars);
  int i = 0;
  for (int e : exps) m.set(i++, e);
  Poly p(nvars);
  p.add_term(m, c);
  return p;
}

Poly random_poly(int nvars, int max_deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(1, 6), expd(0, max_deg);
  Poly p(nvars);
  int t = nterms(rng);
  for (int k = 0; k < t; ++k) {
    Mono m(nvars);
    int budget = max_deg;
    for (int i = 0; i < nvars && budget > 0; ++i) {
      int e = std::uniform_int_distribution<int>(0, budget)(rng);
      m.set(i, e);
      budget -= e;
    }
    p.add_term(m, random_rat(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("normal form: ideal generator reduces to zero") {
  SphereContext ctx(2);
  Poly g = ctx.ideal_generator<Rat>();
  CHECK(nf_reduce(g, ctx).is_zero());

  // v1^2 + v2^2 -> 1
  Poly p = monomial(2, {2, 0}, 1) + monomial(2, {0, 2}, 1);
  CHECK(nf_reduce(p, ctx) == Poly::constant(2, Rat(1)));

  // v2^2 -> 1 - v1^2
  Poly q = monomial(2, {0, 2}, 1);
  Poly expected = Poly::constant(2, Rat(1)) - monomial(2, {2, 0}, 1);
  CHECK(nf_reduce(q, ctx) == expected);
}

TEST_CASE("normal form: radius factor collapses, checked by evaluation") {
  SphereContext ctx(4);
  Poly r2(4);
  for (int i = 0; i < 4; ++i) r2 += Poly::variable(4, i) * Poly::variable(4, i);
  Poly v1cubed = Poly::variable(4, 0) * Poly::variable(4, 0) * Poly::variable(4, 0);
  Poly p = r2 * v1cubed;
  Poly nf = nf_reduce(p, ctx);
  CHECK(nf == v1cubed);
  for (const auto& v : rational_sphere_points(3, 50, 42)) {
    CHECK(p.eval(v) == nf.eval(v));
  }
}

TEST_CASE("normal form: idempotent, kills ideal multiples, degree <= 1 in last var") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    int nvars = 2 + int(rng() % 4);
    SphereContext ctx(nvars);
    Poly p = random_poly(nvars, 5, rng);
    Poly nf = nf_reduce(p, ctx);
    CHECK(nf_reduce(nf, ctx) == nf);
    CHECK(nf.degree_in(nvars - 1) <= 1);
    CHECK(nf_reduce(p * ctx.ideal_generator<Rat>(), ctx).is_zero());
    // representative-independence at exact sphere points
    for (const auto& v : rational_sphere_points(nvars - 1, 3, rng())) {
      CHECK(p.eval(v) == nf.eval(v));
    }
  }
}

TEST_CASE("ring operations are exact") {
  // (v1 + v2)
  Poly v1 = Poly::variable(2, 0), v2 = Poly::variable(2, 1);
  CHECK((v1 + v2) == (v2 + v1));

  // binomial expansion via substitution
  Poly sq = monomial(1, {2}, 1);
  Poly expanded = sq.substitute({v1 + v2});
  Poly expected = v1 * v1 + v1 * v2 * Rat(2) + v2 * v2;
  CHECK(expanded == expected);

  // difference of squares
  Poly a = v1 * v1 - v2 * v2, b = v1 * v1 + v2 * v2;
  Poly quartic = monomial(2, {4, 0}, 1) - monomial(2, {0, 4}, 1);
  CHECK(a * b == quartic);

  // distributivity on random triples
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    int nvars = 1 + int(rng() % 4);
    Poly p = random_poly(nvars, 3, rng), q = random_poly(nvars, 3, rng),
         r = random_poly(nvars, 3, rng);
    CHECK((p + q) * r == p * r + q * r);
  }
}

TEST_CASE("substitution arity is checked") {
  Poly p = Poly::variable(2, 0);
  CHECK_THROWS_AS(p.substitute({p}), std::invalid_argument);
  Poly mismatch(3);
  CHECK_THROWS_AS(Poly::variable(2, 0) + mismatch, std::invalid_argument);
}

TEST_CASE("rational sphere points: exact unit norm, deterministic") {
  auto pts = rational_sphere_points(3, 10, 5);
  REQUIRE(pts.size() == 10);
  for (const auto& v : pts) {
    REQUIRE(v.size() == 4);
    Rat n;
    for (const auto& x : v) n += x * x;
    CHECK(n == 1);
  }
  CHECK(rational_sphere_points(3, 10, 5) == pts);
  CHECK(rational_sphere_points(2, 0, 1).empty());

  // circle points have the Pythagorean form ((2t)/(1+t^2), (1-t^2)/(1+t^2))
  for (const auto& v : rational_sphere_points(1, 5, 9)) {
    CHECK(v[0] * v[0] + v[1] * v[1] == 1);
  }
}

TEST_CASE("gaussian-rational polynomials: conjugation and complex arithmetic") {
  CPoly z(2);
  Mono m(2);
  m.set(0, 1);
  z.add_term(m, GaussRat(Rat(1), Rat(2)));
  CPoly zc = z.conjugate();
  Mono m2(2);
  m2.set(0, 1);
  CHECK(zc.coeff(m2) == GaussRat(Rat(1), Rat(-2)));
  // |z|^2 coefficients are real
  CPoly prod = z * zc;
  for (const auto& [mm, c] : prod.terms()) CHECK(c.im == 0);
}

TEST_CASE("complex/real conversions") {
  Poly p = Poly::variable(3, 1) * Rat(5, 3);
  CHECK(to_real(to_complex(p)) == p);
  CPoly q(1);
  q.add_term(Mono(1), GaussRat(Rat(0), Rat(1)));
  CHECK_THROWS_AS(to_real(q), std::invalid_argument);
}

TEST_CASE("sphere residual flags non-maps") {
  SphereContext ctx(2);
  std::vector<Poly> good = {Poly::variable(2, 0), Poly::variable(2, 1)};
  CHECK(sphere_residual(good, ctx).is_zero());
  std::vector<Poly> bad = {Poly::variable(2, 0) * Rat(2), Poly::variable(2, 1)};
  CHECK(!sphere_residual(bad, ctx).is_zero());
}
