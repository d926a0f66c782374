#pragma once

#include <memory>
#include <string>
#include <vector>

#include "spherekit/clifford.hpp"
#include "spherekit/sphere_map.hpp"

namespace spherekit {

// Certified bounds for q(n), the least target dimension of a non-constant
// polynomial map out of S^n. Every upper bound carries a verified witness;
// every lower bound carries the rules that produced it.
struct QBound {
  int n = 0;
  int lower = 0;
  int upper = 0;
  bool exact = false;
  std::shared_ptr<const SphereMap> witness;  // null only when upper comes from the identity alone
  std::vector<std::string> provenance;       // wood | even | monotone | witness | identity
};

// True iff {r+1, ..., n} contains a power of 2, which rules out any
// non-constant polynomial map S^n -> S^r.
bool wood_obstruction(int n, int r);

QBound q_bounds(int n);

enum class TargetSpace { SO, U, SU, GrR, GrC };

// Bounds for maps into SO(.), U(.), SU(.) and Grassmannians, derived from
// q_bounds(n): SO -> 1+q; U, SU -> 1+q/2; GrR(k) -> 1+max(k, q);
// GrC(k) -> 1+max(k, q/2). Requires n >= 2. k is used only for Grassmannians.
QBound q_group(int n, TargetSpace target, int k = 1);

struct IntRange {
  long lo = 0, hi = 0;
  bool exact = false;
};

// Largest m such that q-type obstructions allow the relevant family of maps:
// real: floor((1 + sqrt(1+8q))/2); complex: floor(sqrt(q)). Interval-valued
// when q(n) itself is only known as an interval.
IntRange m_bound(int n, bool complex_field);

enum class TableFormat { Text, Json, Csv };

// Rows n = 2..max_n with q bounds, q_SO, q_U, m_R, m_C and provenance.
std::string emit_table(int max_n, TableFormat format);

}  // namespace spherekit
