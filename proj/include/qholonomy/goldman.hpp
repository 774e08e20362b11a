#pragma once

// Reroutings of straight loops at their intersection points and the quantum
// Goldman bracket built from them.

#include <vector>

#include "qholonomy/geometry.hpp"
#include "qholonomy/intersections.hpp"
#include "qholonomy/loop_algebra.hpp"

namespace qholo {

/// p1 followed to `at`, one full traversal of p2^sign, then the rest of p1.
struct Rerouting {
  StraightLoop base1;
  StraightLoop base2;
  IntersectionPoint at;
  int sign;  // +1 for p1 at p2, -1 for p1 at p2^{-1}
  PLPath path;
};

/// Throws std::invalid_argument if `at` is not a lift-mode crossing of p1 with
/// p2 or sign is not +-1, std::domain_error for parallel loops.
Rerouting reroute(const StraightLoop& p1, const StraightLoop& p2, const IntersectionPoint& at, int sign);

/// Rerouting at the lift-mode crossing with the given lift parameter.
Rerouting reroute_at(const StraightLoop& p1, const StraightLoop& p2, const Rational& lift_param, int sign);

/// T-value of the rerouted path, from its signed area against the straight representative.
AlgebraElement rerouting_trace(const Rerouting& r);

/// sum_Q (q^{e(Q)} - 1) T(p1 Q p2) + (q^{-e(Q)} - 1) T(p1 Q p2^{-1}) over lift-mode
/// crossings Q with quantum exponent e(Q) = sign * c2. Zero for parallel loops.
AlgebraElement goldman_quantum(const StraightLoop& p1, const StraightLoop& p2);

/// The classical bracket: intersection-weighted reroutings collapsed to their
/// homotopy classes, i.e. (mt - ns)(T(m+s,n+t) - T(m-s,n-t)).
AlgebraElement goldman_classical(const StraightLoop& p1, const StraightLoop& p2);

struct RerouteRow {
  IntersectionPoint at;
  PLPath positive_path;
  PLPath negative_path;
  AlgebraElement positive;  // T(p1 Q p2)
  AlgebraElement negative;  // T(p1 Q p2^{-1})
};

struct BracketReport {
  StraightLoop p1;
  StraightLoop p2;
  long total_intersection = 0;
  AlgebraElement straight;   // commutator of straight representatives
  AlgebraElement rerouted;   // intersection/rerouting form
  AlgebraElement difference; // straight - rerouted
  AlgebraElement classical;  // Poisson bracket
  std::vector<RerouteRow> rows;
  /// Distinct torus points with their multiplied indices, for comparison with `rows`.
  std::vector<IntersectionPoint> geometric_points;

  bool equal() const { return difference.is_zero(); }
};

BracketReport verify_bracket_equality(const StraightLoop& p1, const StraightLoop& p2);

}  // namespace qholo
