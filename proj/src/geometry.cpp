#include "qholonomy/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qholo {

namespace {

// Twice the signed area of the closed polygon through `pts` (closing edge implied).
Rational twice_shoelace(std::span<const RatPoint> pts) {
  Rational sum = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const RatPoint& a = pts[i];
    const RatPoint& b = pts[(i + 1) % pts.size()];
    sum += a.x * b.y - b.x * a.y;
  }
  return sum;
}

using IPoint = LatticePolygon::Point;

long long orient(const IPoint& a, const IPoint& b, const IPoint& c) {
  return static_cast<long long>(b.x - a.x) * (c.y - a.y) - static_cast<long long>(b.y - a.y) * (c.x - a.x);
}

bool on_segment(const IPoint& a, const IPoint& b, const IPoint& p) {
  return orient(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

int sgn(long long v) { return (v > 0) - (v < 0); }

bool segments_touch(const IPoint& a, const IPoint& b, const IPoint& c, const IPoint& d) {
  const int o1 = sgn(orient(a, b, c));
  const int o2 = sgn(orient(a, b, d));
  const int o3 = sgn(orient(c, d, a));
  const int o4 = sgn(orient(c, d, b));
  if (o1 != o2 && o3 != o4) return true;
  return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b);
}

}  // namespace

PLPath::PLPath(std::vector<RatPoint> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) throw std::invalid_argument("a PL path needs at least two vertices");
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    if (vertices_[i] == vertices_[i + 1]) {
      throw std::invalid_argument("zero-length segment at vertex " + std::to_string(i));
    }
  }
}

PLPath PLPath::straight(const Rational& x, const Rational& y) {
  return PLPath({RatPoint(0, 0), RatPoint(x, y)});
}

PLPath PLPath::from_displacements(std::span<const RatPoint> steps) {
  std::vector<RatPoint> v;
  v.reserve(steps.size() + 1);
  v.emplace_back(0, 0);
  for (const RatPoint& s : steps) v.push_back(v.back() + s);
  return PLPath(std::move(v));
}

LatticePolygon::LatticePolygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw std::invalid_argument("a polygon needs at least three vertices");
  for (std::size_t i = 0; i < n; ++i) {
    if (vertices_[i] == vertices_[(i + 1) % n]) throw std::invalid_argument("repeated polygon vertex");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = vertices_[i];
    const Point& b = vertices_[(i + 1) % n];
    // Adjacent edge folding back onto this one.
    const Point& c = vertices_[(i + 2) % n];
    if (orient(a, b, c) == 0) {
      const long long dot =
          static_cast<long long>(b.x - a.x) * (c.x - b.x) + static_cast<long long>(b.y - a.y) * (c.y - b.y);
      if (dot < 0) throw std::invalid_argument("polygon boundary is self-intersecting");
    }
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (segments_touch(a, b, vertices_[j], vertices_[(j + 1) % n])) {
        throw std::invalid_argument("polygon boundary is self-intersecting");
      }
    }
  }
}

PLPath LatticePolygon::boundary() const {
  std::vector<RatPoint> v;
  v.reserve(vertices_.size() + 1);
  for (const Point& p : vertices_) v.emplace_back(p.x, p.y);
  v.push_back(v.front());
  return PLPath(std::move(v));
}

RatPoint endpoint(const PLPath& p) { return p.end(); }

PLPath concat(const PLPath& p, const PLPath& p2) {
  const RatPoint shift = p.end() - p2.start();
  std::vector<RatPoint> v = p.vertices();
  v.reserve(v.size() + p2.segment_count());
  for (std::size_t i = 1; i < p2.vertices().size(); ++i) v.push_back(p2.vertices()[i] + shift);
  return PLPath(std::move(v));
}

PLPath inverse(const PLPath& p) {
  std::vector<RatPoint> v;
  v.reserve(p.vertices().size());
  const RatPoint last = p.end();
  for (auto it = p.vertices().rbegin(); it != p.vertices().rend(); ++it) v.push_back(*it - last);
  return PLPath(std::move(v));
}

PLPath canonicalize(const PLPath& p) {
  std::vector<RatPoint> v{p.start()};
  for (std::size_t i = 1; i < p.vertices().size(); ++i) {
    const RatPoint& next = p.vertices()[i];
    if (v.size() >= 2) {
      const RatPoint prev_step = v.back() - v[v.size() - 2];
      const RatPoint step = next - v.back();
      const Rational dot = prev_step.x * step.x + prev_step.y * step.y;
      if (cross(prev_step, step) == 0 && dot > 0) {
        v.back() = next;
        continue;
      }
    }
    v.push_back(next);
  }
  return PLPath(std::move(v));
}

Rational signed_area_loop(const PLPath& loop) {
  if (!loop.is_closed()) throw std::invalid_argument("signed_area_loop requires a closed path");
  const auto& v = loop.vertices();
  return twice_shoelace(std::span<const RatPoint>(v).first(v.size() - 1)) / 2;
}

Rational signed_area_between(const PLPath& p, const PLPath& p2) {
  if (p.start() != p2.start()) throw std::invalid_argument("paths do not share a start point");
  if (p.end() != p2.end()) throw std::invalid_argument("paths do not share an endpoint");
  std::vector<RatPoint> loop = p.vertices();
  const auto& w = p2.vertices();
  for (std::size_t i = w.size() - 1; i-- > 1;) loop.push_back(w[i]);
  return twice_shoelace(loop) / 2;
}

PickCount pick_area(const LatticePolygon& poly) {
  const auto& v = poly.vertices();
  const std::size_t n = v.size();
  PickCount out;
  long min_x = v[0].x, max_x = v[0].x, min_y = v[0].y, max_y = v[0].y;
  for (std::size_t i = 0; i < n; ++i) {
    const IPoint& a = v[i];
    const IPoint& b = v[(i + 1) % n];
    out.boundary += std::gcd(std::abs(b.x - a.x), std::abs(b.y - a.y));
    min_x = std::min(min_x, a.x);
    max_x = std::max(max_x, a.x);
    min_y = std::min(min_y, a.y);
    max_y = std::max(max_y, a.y);
  }
  for (long x = min_x; x <= max_x; ++x) {
    for (long y = min_y; y <= max_y; ++y) {
      const IPoint p{x, y};
      bool boundary = false;
      bool inside = false;
      for (std::size_t i = 0; i < n && !boundary; ++i) {
        const IPoint& a = v[i];
        const IPoint& b = v[(i + 1) % n];
        if (on_segment(a, b, p)) {
          boundary = true;
          break;
        }
        // Half-open crossing rule on the horizontal ray to +x.
        if ((a.y > y) != (b.y > y)) {
          const long long o = orient(a, b, p);
          if ((b.y > a.y) ? o > 0 : o < 0) inside = !inside;
        }
      }
      if (!boundary && inside) ++out.interior;
    }
  }
  out.area = Rational(out.interior) + make_rational(out.boundary, 2) - 1;
  return out;
}

FundamentalReduction fundamental_reduction(long m, long n) {
  if (m == 0 && n == 0) throw std::invalid_argument("the zero path has no fundamental reduction");
  FundamentalReduction out;
  out.m = m;
  out.n = n;
  out.multiplicity = std::gcd(std::abs(m), std::abs(n));

  std::set<Rational> cuts{Rational(0), Rational(1)};
  for (long k = 1; k < std::abs(m); ++k) cuts.insert(make_rational(k, std::abs(m)));
  for (long k = 1; k < std::abs(n); ++k) cuts.insert(make_rational(k, std::abs(n)));

  const RatPoint dir(m, n);
  for (auto it = cuts.begin(); std::next(it) != cuts.end(); ++it) {
    const Rational& lo = *it;
    const Rational& hi = *std::next(it);
    const RatPoint a = lo * dir;
    const RatPoint b = hi * dir;
    // The cell containing the open piece; boundary crossings go to the outgoing piece.
    const RatPoint mid = Rational(1, 2) * (a + b);
    const RatPoint cell(Rational(qholo::floor(mid.x)), Rational(qholo::floor(mid.y)));
    out.segments.push_back({a - cell, b - cell});
  }
  return out;
}

}  // namespace qholo
