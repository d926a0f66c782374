#include <doctest.h>

#include <json.hpp>

#include "spherekit/bounds.hpp"

using namespace spherekit;

TEST_CASE("power-of-two obstruction") {
  CHECK(wood_obstruction(4, 3));    // {4} contains 4
  CHECK(!wood_obstruction(3, 2));   // {3} has no power of 2
  CHECK(wood_obstruction(48, 31));  // {32..48} contains 32
  CHECK(!wood_obstruction(48, 32));
  CHECK(wood_obstruction(2, 1));
  CHECK(!wood_obstruction(5, 4));
}

TEST_CASE("q values on the certified range") {
  auto q_expected = [](int n) {
    if (n <= 3) return 2;
    if (n <= 7) return 4;
    if (n <= 15) return 8;
    if (n <= 31) return 16;
    return 32;  // 32..47
  };
  for (int n = 2; n <= 47; ++n) {
    QBound b = q_bounds(n);
    CHECK(b.exact);
    CHECK(b.lower == q_expected(n));
    CHECK(b.upper == q_expected(n));
    REQUIRE(b.witness != nullptr);
    CHECK(b.witness->source_dim == n);
    CHECK(b.witness->target_dim == b.upper);
  }
}

TEST_CASE("q(48) is an honest interval") {
  QBound b = q_bounds(48);
  CHECK(!b.exact);
  CHECK(b.lower == 32);
  CHECK(b.upper == 48);
}

TEST_CASE("structural facts: even values, lower bound above n/2, monotone") {
  int prev = 0;
  for (int n = 2; n <= 48; ++n) {
    QBound b = q_bounds(n);
    CHECK(b.lower % 2 == 0);
    CHECK(2 * b.lower > n);
    CHECK(b.lower >= prev);
    CHECK(b.lower <= b.upper);
    CHECK(b.upper <= n);
    prev = b.lower;
  }
  // the circle admits angle doubling: q(1) = 1, the one odd value
  QBound circle = q_bounds(1);
  CHECK(circle.exact);
  CHECK(circle.lower == 1);
  CHECK(circle.upper == 1);
  REQUIRE(circle.witness != nullptr);
  CHECK(verify_sphere_map(*circle.witness).pass);
  CHECK_THROWS_AS(q_bounds(0), std::invalid_argument);
}

TEST_CASE("group and grassmannian bounds derive from q") {
  CHECK(q_group(3, TargetSpace::SO).lower == 3);  // 1 + q(3) = 3
  CHECK(q_group(3, TargetSpace::SO).upper == 3);
  CHECK(q_group(7, TargetSpace::U).lower == 3);   // 1 + q(7)/2 = 3
  CHECK(q_group(7, TargetSpace::SU).lower == 3);
  CHECK(q_group(2, TargetSpace::GrR, 3).lower == 4);  // 1 + max(3, 2)
  CHECK(q_group(2, TargetSpace::GrR, 1).lower == 3);  // 1 + max(1, 2)
  CHECK(q_group(4, TargetSpace::GrC, 1).lower == 3);  // 1 + max(1, 4/2)
}

TEST_CASE("m bounds from q") {
  // real: floor((1 + sqrt(1 + 8 q)) / 2); complex: floor(sqrt(q))
  IntRange r15 = m_bound(15, false);
  CHECK(r15.exact);
  CHECK(r15.lo == 4);  // q = 8: (1 + sqrt(65))/2 = 4.53...
  CHECK(r15.hi == 4);
  IntRange c2 = m_bound(2, true);
  CHECK(c2.lo == 1);  // q = 2: floor(sqrt(2)) = 1
  IntRange r4 = m_bound(4, false);
  CHECK(r4.lo == 3);  // q = 4: (1 + sqrt(33))/2 = 3.37...
  IntRange r48 = m_bound(48, false);
  CHECK(!r48.exact);
  CHECK(r48.lo <= r48.hi);
}

TEST_CASE("witness provenance recorded") {
  QBound b = q_bounds(10);
  bool has_witness = false, has_wood = false;
  for (const auto& p : b.provenance) {
    if (p == "witness") has_witness = true;
    if (p == "wood") has_wood = true;
  }
  CHECK(has_witness);
  CHECK(has_wood);
}

TEST_CASE("table emission") {
  std::string csv = emit_table(15, TableFormat::Csv);
  CHECK(csv.find("8,8,8,true") != std::string::npos);
  CHECK(csv.find("2,2,2,true") != std::string::npos);

  std::string txt = emit_table(10, TableFormat::Text);
  CHECK(!txt.empty());

  auto j = nlohmann::json::parse(emit_table(10, TableFormat::Json));
  REQUIRE(j.is_array());
  CHECK(j.size() == 9);  // rows n = 2..10
  CHECK(j[0]["n"] == 2);
  CHECK(j[6]["q_lower"] == 8);  // n = 8
  CHECK(j[6]["q_upper"] == 8);
}
