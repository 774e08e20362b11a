#pragma once

// Exact planar geometry of piecewise-linear lattice paths. Paths in R^2 that
// start at the origin and end at an integer point (m, n) represent loops on the
// torus R^2 / Z^2; (m, n) is their homotopy class.

#include <cstddef>
#include <span>
#include <vector>

#include "qholonomy/rational.hpp"

namespace qholo {

struct RatPoint {
  Rational x;
  Rational y;

  RatPoint() = default;
  RatPoint(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}

  bool is_integer() const { return qholo::is_integer(x) && qholo::is_integer(y); }

  friend bool operator==(const RatPoint& a, const RatPoint& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const RatPoint& a, const RatPoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
  friend RatPoint operator+(const RatPoint& a, const RatPoint& b) { return {a.x + b.x, a.y + b.y}; }
  friend RatPoint operator-(const RatPoint& a, const RatPoint& b) { return {a.x - b.x, a.y - b.y}; }
  friend RatPoint operator-(const RatPoint& a) { return {-a.x, -a.y}; }
  friend RatPoint operator*(const Rational& k, const RatPoint& a) { return {k * a.x, k * a.y}; }
};

/// z-component of a x b.
inline Rational cross(const RatPoint& a, const RatPoint& b) { return a.x * b.y - a.y * b.x; }

/// A polyline with at least two vertices and no zero-length segments.
class PLPath {
 public:
  explicit PLPath(std::vector<RatPoint> vertices);

  /// (0,0) -> (x,y).
  static PLPath straight(const Rational& x, const Rational& y);
  /// Starts at the origin and walks the given displacement vectors in order.
  static PLPath from_displacements(std::span<const RatPoint> steps);

  const std::vector<RatPoint>& vertices() const { return vertices_; }
  std::size_t segment_count() const { return vertices_.size() - 1; }
  const RatPoint& start() const { return vertices_.front(); }
  const RatPoint& end() const { return vertices_.back(); }
  bool is_closed() const { return start() == end(); }

  /// Displacement vector of segment i.
  RatPoint step(std::size_t i) const { return vertices_[i + 1] - vertices_[i]; }

  friend bool operator==(const PLPath&, const PLPath&) = default;

 private:
  std::vector<RatPoint> vertices_;
};

/// A simple closed polygon with integer vertices, listed without repeating the
/// first vertex. Construction rejects self-intersecting boundaries.
class LatticePolygon {
 public:
  struct Point {
    long x;
    long y;
    friend bool operator==(const Point&, const Point&) = default;
  };

  explicit LatticePolygon(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return vertices_; }
  /// The boundary as a closed PLPath (first vertex repeated at the end).
  PLPath boundary() const;

 private:
  std::vector<Point> vertices_;
};

struct PickCount {
  long interior = 0;
  long boundary = 0;
  Rational area;  // interior + boundary/2 - 1
};

struct Segment {
  RatPoint from;
  RatPoint to;
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Image of the straight path (0,0)->(m,n) in the unit square. `segments`
/// covers the full path, so a loop of multiplicity c lists its primitive
/// support c times in a row.
struct FundamentalReduction {
  long m = 0;
  long n = 0;
  long multiplicity = 1;
  std::vector<Segment> segments;

  /// One traversal of the underlying primitive loop.
  std::span<const Segment> support() const {
    return std::span<const Segment>(segments).first(segments.size() / static_cast<std::size_t>(multiplicity));
  }
};

RatPoint endpoint(const PLPath& p);

/// p followed by p2, with p2 translated to start where p ends. Collinear join
/// vertices are kept.
PLPath concat(const PLPath& p, const PLPath& p2);

/// Reverse traversal, translated to start at the origin.
PLPath inverse(const PLPath& p);

/// Merges consecutive segments that continue in the same direction.
PLPath canonicalize(const PLPath& p);

/// Winding-number weighted area of a closed path (generalized shoelace).
/// Throws std::invalid_argument if the path is not closed.
Rational signed_area_loop(const PLPath& loop);

/// Signed area S(p, p2) of the closed loop p followed by p2 reversed; this is
/// the exponent of q in U_p = q^S U_p2. Throws std::invalid_argument unless the
/// paths share both start and end points.
Rational signed_area_between(const PLPath& p, const PLPath& p2);

/// Lattice point counts and the Pick area I + B/2 - 1.
PickCount pick_area(const LatticePolygon& poly);

/// Throws std::invalid_argument for (0,0).
FundamentalReduction fundamental_reduction(long m, long n);

}  // namespace qholo
