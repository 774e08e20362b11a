#include "qholonomy/intersections.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace qholo {

namespace {

RatPoint reduce_mod_lattice(const RatPoint& p) {
  return {p.x - Rational(qholo::floor(p.x)), p.y - Rational(qholo::floor(p.y))};
}

void require_transversal(const StraightLoop& p1, const StraightLoop& p2) {
  if (total_intersection_number(p1, p2) == 0) {
    throw std::domain_error("loops (" + std::to_string(p1.m()) + "," + std::to_string(p1.n()) + ") and (" +
                            std::to_string(p2.m()) + "," + std::to_string(p2.n()) + ") are parallel");
  }
}

// Crossings of the lift of (m,n) with lattice lines parallel to the primitive
// direction (s,t): lambda (m t - n s) must be an integer, so lambda = k / |m t - n s|.
std::vector<Rational> crossing_params(long m, long n, long s, long t) {
  const long d = std::abs(m * t - n * s);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(d));
  for (long k = 0; k < d; ++k) out.push_back(make_rational(k, d));
  return out;
}

}  // namespace

StraightLoop::StraightLoop(long m, long n) : m_(m), n_(n), multiplicity_(std::gcd(std::abs(m), std::abs(n))) {
  if (m == 0 && n == 0) throw std::invalid_argument("a straight loop cannot be (0,0)");
}

int intersection_index_sign(const StraightLoop& p1, const StraightLoop& p2) {
  require_transversal(p1, p2);
  return total_intersection_number(p1, p2) > 0 ? 1 : -1;
}

long total_intersection_number(const StraightLoop& p1, const StraightLoop& p2) {
  return p1.m() * p2.n() - p1.n() * p2.m();
}

std::vector<IntersectionPoint> enumerate_points(const StraightLoop& p1, const StraightLoop& p2) {
  const int sign = intersection_index_sign(p1, p2);
  const long index = sign * p1.multiplicity() * p2.multiplicity();
  const RatPoint dir(p1.primitive_m(), p1.primitive_n());
  std::vector<IntersectionPoint> out;
  // Each torus point is visited once by the primitive loop under p1.
  for (const Rational& lam : crossing_params(p1.primitive_m(), p1.primitive_n(), p2.primitive_m(), p2.primitive_n())) {
    Rational lift = lam / p1.multiplicity();
    out.push_back({reduce_mod_lattice(lam * dir), std::move(lift), index});
  }
  return out;
}

std::vector<IntersectionPoint> enumerate_along_p1(const StraightLoop& p1, const StraightLoop& p2) {
  const int sign = intersection_index_sign(p1, p2);
  const long exponent = sign * p2.multiplicity();
  const RatPoint dir(p1.m(), p1.n());
  std::vector<IntersectionPoint> out;
  for (const Rational& lam : crossing_params(p1.m(), p1.n(), p2.primitive_m(), p2.primitive_n())) {
    out.push_back({reduce_mod_lattice(lam * dir), lam, exponent});
  }
  return out;
}

std::vector<IntersectionPoint> enumerate(const StraightLoop& p1, const StraightLoop& p2, EnumerationMode mode) {
  return mode == EnumerationMode::Geometric ? enumerate_points(p1, p2) : enumerate_along_p1(p1, p2);
}

RatPoint lift_point(const StraightLoop& p1, const IntersectionPoint& at) {
  return at.lift_param * RatPoint(p1.m(), p1.n());
}

}  // namespace qholo
