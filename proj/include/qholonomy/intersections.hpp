#pragma once

// Transversal intersections of straight torus loops.
//
// Two enumeration modes are provided. Geometric mode lists each distinct torus
// point once, with index sign * c1 * c2. Lift mode walks the full lift of p1
// from (0,0) to (m1,n1) and lists every crossing with the lattice lines
// parallel to p2; points are not deduplicated and each carries the quantum
// exponent sign * c2.

#include <vector>

#include "qholonomy/geometry.hpp"
#include "qholonomy/rational.hpp"

namespace qholo {

class StraightLoop {
 public:
  /// Throws std::invalid_argument for (0,0).
  StraightLoop(long m, long n);

  long m() const { return m_; }
  long n() const { return n_; }
  /// gcd(|m|, |n|).
  long multiplicity() const { return multiplicity_; }
  long primitive_m() const { return m_ / multiplicity_; }
  long primitive_n() const { return n_ / multiplicity_; }
  bool is_reducible() const { return multiplicity_ > 1; }

  PLPath path() const { return PLPath::straight(m_, n_); }
  StraightLoop inverse() const { return {-m_, -n_}; }

  friend bool operator==(const StraightLoop&, const StraightLoop&) = default;

 private:
  long m_;
  long n_;
  long multiplicity_;
};

struct IntersectionPoint {
  RatPoint position;    // in [0,1)^2
  Rational lift_param;  // fraction of p1's full lift, in [0,1)
  long index = 0;

  friend bool operator==(const IntersectionPoint&, const IntersectionPoint&) = default;
};

enum class EnumerationMode { Geometric, Lift };

/// Sign of m1 n2 - n1 m2. Throws std::domain_error for parallel loops.
int intersection_index_sign(const StraightLoop& p1, const StraightLoop& p2);

/// m1 n2 - n1 m2; zero for parallel loops.
long total_intersection_number(const StraightLoop& p1, const StraightLoop& p2);

/// Distinct torus points, sorted by lift_param. Throws std::domain_error for parallel loops.
std::vector<IntersectionPoint> enumerate_points(const StraightLoop& p1, const StraightLoop& p2);

/// Crossings along p1's full lift, sorted by lift_param. Throws std::domain_error for parallel loops.
std::vector<IntersectionPoint> enumerate_along_p1(const StraightLoop& p1, const StraightLoop& p2);

std::vector<IntersectionPoint> enumerate(const StraightLoop& p1, const StraightLoop& p2, EnumerationMode mode);

/// lift_param * (m1, n1): the crossing on p1's lift in R^2.
RatPoint lift_point(const StraightLoop& p1, const IntersectionPoint& at);

}  // namespace qholo
