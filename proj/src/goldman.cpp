#include "qholonomy/goldman.hpp"

#include <stdexcept>

namespace qholo {

namespace {

PLPath rerouted_path(const StraightLoop& p1, const StraightLoop& p2, const Rational& lift_param, int sign) {
  const RatPoint full1(p1.m(), p1.n());
  const RatPoint full2(sign * p2.m(), sign * p2.n());
  const RatPoint at = lift_param * full1;
  std::vector<RatPoint> v{RatPoint(0, 0)};
  if (at != v.front()) v.push_back(at);
  v.push_back(at + full2);
  v.push_back(full1 + full2);
  return PLPath(std::move(v));
}

}  // namespace

Rerouting reroute(const StraightLoop& p1, const StraightLoop& p2, const IntersectionPoint& at, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("rerouting sign must be +1 or -1");
  if (total_intersection_number(p1, p2) == 0) throw std::domain_error("parallel loops have no reroutings");
  const Rational& lam = at.lift_param;
  const long d = p1.m() * p2.primitive_n() - p1.n() * p2.primitive_m();
  if (lam < 0 || lam >= 1 || !is_integer(lam * d)) {
    throw std::invalid_argument("lift parameter " + to_string(lam) + " is not a crossing along p1");
  }
  return Rerouting{p1, p2, at, sign, rerouted_path(p1, p2, lam, sign)};
}

Rerouting reroute_at(const StraightLoop& p1, const StraightLoop& p2, const Rational& lift_param, int sign) {
  for (const IntersectionPoint& q : enumerate_along_p1(p1, p2)) {
    if (q.lift_param == lift_param) return reroute(p1, p2, q, sign);
  }
  throw std::invalid_argument("lift parameter " + to_string(lift_param) + " is not a crossing along p1");
}

AlgebraElement rerouting_trace(const Rerouting& r) { return t_of_path(r.path); }

AlgebraElement goldman_quantum(const StraightLoop& p1, const StraightLoop& p2) {
  AlgebraElement out;
  if (total_intersection_number(p1, p2) == 0) return out;
  const QLaurent one = QLaurent::constant(1);
  for (const IntersectionPoint& q : enumerate_along_p1(p1, p2)) {
    const QLaurent up = QLaurent::monomial(q.index) - one;
    const QLaurent down = QLaurent::monomial(-q.index) - one;
    out += up * rerouting_trace(reroute(p1, p2, q, +1));
    out += down * rerouting_trace(reroute(p1, p2, q, -1));
  }
  return out;
}

AlgebraElement goldman_classical(const StraightLoop& p1, const StraightLoop& p2) {
  return poisson_bracket(p1.m(), p1.n(), p2.m(), p2.n());
}

BracketReport verify_bracket_equality(const StraightLoop& p1, const StraightLoop& p2) {
  BracketReport report{p1, p2, total_intersection_number(p1, p2), {}, {}, {}, {}, {}, {}};
  report.straight = commutator_straight(p1.m(), p1.n(), p2.m(), p2.n());
  report.classical = goldman_classical(p1, p2);
  if (report.total_intersection != 0) {
    for (const IntersectionPoint& q : enumerate_along_p1(p1, p2)) {
      Rerouting plus = reroute(p1, p2, q, +1);
      Rerouting minus = reroute(p1, p2, q, -1);
      AlgebraElement t_plus = rerouting_trace(plus);
      AlgebraElement t_minus = rerouting_trace(minus);
      report.rows.push_back({q, plus.path, minus.path, std::move(t_plus), std::move(t_minus)});
    }
    report.geometric_points = enumerate_points(p1, p2);
  }
  const QLaurent one = QLaurent::constant(1);
  for (const RerouteRow& row : report.rows) {
    report.rerouted += (QLaurent::monomial(row.at.index) - one) * row.positive;
    report.rerouted += (QLaurent::monomial(-row.at.index) - one) * row.negative;
  }
  report.difference = report.straight - report.rerouted;
  return report;
}

}  // namespace qholo
