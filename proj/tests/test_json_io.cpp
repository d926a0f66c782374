#include <doctest.h>

#include <random>

#include "spherekit/clifford.hpp"
#include "spherekit/json_io.hpp"
#include "spherekit/points.hpp"

using namespace spherekit;

TEST_CASE("rational parsing and printing round-trips") {
  for (const char* s : {"0", "1", "-7", "3/4", "-22/7", "123456789/987654321"}) {
    Rat q = parse_rat(s);
    CHECK(parse_rat(rat_to_string(q)) == q);
  }
  CHECK(rat_to_string(Rat(4, 8)) == "1/2");
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("abc"), std::invalid_argument);

  GaussRat z(Rat(1, 2), Rat(-3, 5));
  CHECK(parse_gauss(gauss_to_string(z)) == z);
  CHECK(parse_gauss(gauss_to_string(GaussRat(Rat(0), Rat(1)))) ==
        GaussRat(Rat(0), Rat(1)));
}

TEST_CASE("polynomial json round-trip, canonical term order") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 20; ++t) {
    Poly p(3);
    for (int k = 0; k < 5; ++k) {
      Mono m(3);
      for (int i = 0; i < 3; ++i) m.set(i, int(rng() % 4));
      p.add_term(m, random_rat(rng));
    }
    Json j = poly_to_json(p);
    CHECK(poly_from_json(j) == p);
    // canonical: serializing twice gives identical text
    CHECK(j.dump() == poly_to_json(poly_from_json(j)).dump());
  }

  CPoly c(2);
  Mono m(2);
  m.set(1, 3);
  c.add_term(m, GaussRat(Rat(1, 3), Rat(-2)));
  CHECK(cpoly_from_json(poly_to_json(c)) == c);
}

TEST_CASE("sphere map json round-trip") {
  SphereMap H = hopf_construction(normed_bilinear_from_clifford(clifford_system(2)));
  Json j = sphere_map_to_json(H);
  SphereMap back = sphere_map_from_json(j);
  CHECK(back.source_dim == H.source_dim);
  CHECK(back.target_dim == H.target_dim);
  CHECK(maps_equal_nf(back, H));
  CHECK(verify_sphere_map(back).pass);

  CHECK_THROWS(sphere_map_from_json(Json::object()));
}

TEST_CASE("matrix map json round-trip") {
  for (bool cplx : {false, true}) {
    MatrixPolyMap M = reflection_map(2, cplx);
    MatrixPolyMap back = matrix_map_from_json(matrix_map_to_json(M));
    CHECK(back.size == M.size);
    CHECK(back.group == M.group);
    CHECK(back.source_dim == M.source_dim);
    REQUIRE(back.entries.size() == M.entries.size());
    for (std::size_t i = 0; i < M.entries.size(); ++i)
      CHECK(back.entries[i] == M.entries[i]);
  }
}

TEST_CASE("clifford system json round-trip") {
  CliffordSystem cs = clifford_system(8);
  CliffordSystem back = clifford_from_json(clifford_to_json(cs));
  CHECK(back.dim == cs.dim);
  REQUIRE(back.structures.size() == cs.structures.size());
  for (std::size_t i = 0; i < cs.structures.size(); ++i)
    CHECK(int_eq(back.structures[i], cs.structures[i]));
  CHECK(verify_clifford(back).pass);
}

TEST_CASE("normed bilinear json round-trip") {
  NormedBilinear F = normed_bilinear_from_clifford(clifford_system(4));
  NormedBilinear back = normed_bilinear_from_json(normed_bilinear_to_json(F));
  CHECK(back.r == F.r);
  CHECK(back.s == F.s);
  CHECK(back.t == F.t);
  CHECK(back.tensor == F.tensor);
  CHECK(verify_normed(back));
}

TEST_CASE("schottky and bundle json round-trip") {
  SchottkyGroup G;
  G.generators.push_back({Rat(3), Rat(0), Rat(0), Rat(1, 3)});
  G.generators.push_back({Rat(49, 5), Rat(-24, 5), Rat(48, 5), Rat(-23, 5)});
  SchottkyGroup back = schottky_from_json(schottky_to_json(G));
  REQUIRE(back.rank() == 2);
  for (int i = 0; i < 2; ++i) {
    CHECK(back.generators[i].a == G.generators[i].a);
    CHECK(back.generators[i].b == G.generators[i].b);
    CHECK(back.generators[i].c == G.generators[i].c);
    CHECK(back.generators[i].d == G.generators[i].d);
  }

  std::mt19937_64 rng(9);
  FlatBundle B;
  B.rank = 2;
  B.images = {random_unitary(2, rng), random_unitary(2, rng)};
  FlatBundle bb = bundle_from_json(bundle_to_json(B));
  CHECK(bb.rank == 2);
  CHECK(bb.images == B.images);
}

TEST_CASE("class entry serialization carries word, primitivity, length") {
  ClassEntry e{{1, 2, -1, 2}, true, 3.5};
  Json j = class_entry_to_json(e);
  CHECK(j["word"] == Json::array({1, 2, -1, 2}));
  CHECK(j["primitive"] == true);
  CHECK(j["length"] == 3.5);
}
