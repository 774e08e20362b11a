#pragma once
// Lattice helpers for tests: random simple polygons, absolute shoelace area,
// and brute-force crossings of fundamental reductions in the unit square.

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "qholonomy/geometry.hpp"

namespace oracle {

using qholo::LatticePolygon;
using qholo::Rational;
using qholo::RatPoint;

/// Star-shaped polygon: random lattice points sorted by angle around a centre.
/// Candidates the polygon constructor rejects are redrawn.
inline LatticePolygon random_simple_polygon(std::mt19937_64& rng, long bound = 6) {
  std::uniform_int_distribution<long> coord(-bound, bound);
  std::uniform_int_distribution<int> count(3, 9);
  while (true) {
    const int k = count(rng);
    std::vector<LatticePolygon::Point> pts;
    for (int i = 0; i < k; ++i) pts.push_back({coord(rng), coord(rng)});
    double cx = 0, cy = 0;
    for (const auto& p : pts) {
      cx += p.x;
      cy += p.y;
    }
    cx /= k;
    cy /= k;
    std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
      return std::atan2(a.y - cy, a.x - cx) < std::atan2(b.y - cy, b.x - cx);
    });
    try {
      return LatticePolygon(pts);
    } catch (const std::invalid_argument&) {
    }
  }
}

inline Rational shoelace_abs(const LatticePolygon& poly) {
  const auto& v = poly.vertices();
  long twice = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    twice += a.x * b.y - a.y * b.x;
  }
  return qholo::make_rational(std::abs(twice), 2);
}

inline std::optional<RatPoint> segment_crossing(const qholo::Segment& s, const qholo::Segment& t) {
  const RatPoint d1 = s.to - s.from;
  const RatPoint d2 = t.to - t.from;
  const Rational den = qholo::cross(d1, d2);
  if (den == 0) return std::nullopt;
  const RatPoint w = t.from - s.from;
  const Rational u = qholo::cross(w, d2) / den;
  const Rational v = qholo::cross(w, d1) / den;
  if (u < 0 || u > 1 || v < 0 || v > 1) return std::nullopt;
  return s.from + u * d1;
}

inline RatPoint mod_one(const RatPoint& p) {
  return {p.x - Rational(qholo::floor(p.x)), p.y - Rational(qholo::floor(p.y))};
}

/// Distinct torus points where the two reduced pictures meet. The second
/// picture is also shifted by the eight neighbouring unit vectors so that
/// meetings on identified edges and corners are found.
inline std::set<RatPoint> reduced_crossings(long m1, long n1, long m2, long n2) {
  const auto r1 = qholo::fundamental_reduction(m1, n1);
  const auto r2 = qholo::fundamental_reduction(m2, n2);
  std::set<RatPoint> out;
  for (const auto& s : r1.support())
    for (const auto& t : r2.support())
      for (long dx = -1; dx <= 1; ++dx)
        for (long dy = -1; dy <= 1; ++dy) {
          const RatPoint d(dx, dy);
          if (auto x = segment_crossing(s, {t.from + d, t.to + d})) out.insert(mod_one(*x));
        }
  return out;
}

}  // namespace oracle
