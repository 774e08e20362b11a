// Acceptance gate: one PASS/FAIL line per criterion. Tolerances and time
// limits are fixed here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "clock_shift.hpp"
#include "lattice.hpp"
#include "qholonomy/geometry.hpp"
#include "qholonomy/goldman.hpp"
#include "qholonomy/holonomy.hpp"
#include "qholonomy/intersections.hpp"
#include "qholonomy/io.hpp"
#include "qholonomy/loop_algebra.hpp"
#include "qholonomy/modular.hpp"
#include "qholonomy/verify.hpp"
#include "winding_area.hpp"

namespace {

using namespace qholo;
using Clock = std::chrono::steady_clock;

constexpr double kWorkedExampleLimitMs = 1.0;
constexpr double kDeterminantSweepLimitS = 60.0;
constexpr double kJacobiLimitS = 120.0;
constexpr double kMatrixRelTol = 1e-9;
constexpr long kSweep = 6;
constexpr int kRandomPaths = 200;
constexpr int kRandomPolygons = 100;
constexpr int kRandomMatrices = 50;

Rational q(long n, long d = 1) { return make_rational(n, d); }
QLaurent qpow(long n, long d = 1) { return QLaurent::monomial(make_rational(n, d)); }

AlgebraElement term(long m, long n, const QLaurent& c) {
  AlgebraElement e;
  e.add_term(m, n, c);
  return e;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

template <typename F>
void for_each_pair(long bound, F&& f) {
  for (long m = -bound; m <= bound; ++m)
    for (long n = -bound; n <= bound; ++n)
      for (long s = -bound; s <= bound; ++s)
        for (long t = -bound; t <= bound; ++t) f(m, n, s, t);
}

std::string pair_str(long m, long n, long s, long t) {
  return "(" + std::to_string(m) + "," + std::to_string(n) + "),(" + std::to_string(s) + "," + std::to_string(t) + ")";
}

Outcome worked_commutator() {
  Outcome o;
  const auto t0 = Clock::now();
  const AlgebraElement c = commutator_straight(1, 2, 2, 1);
  const LoopClass order[] = {LoopClass::canonical(3, 3), LoopClass::canonical(-1, 1)};
  const std::string latex = to_latex_factored(c, order);
  const double ms = seconds_since(t0) * 1e3;
  o.require(c == (qpow(-3, 2) - qpow(3, 2)) * (t_straight(3, 3) - t_straight(-1, 1)), "element mismatch");
  o.require(latex == "(q^{-3/2}-q^{3/2})(T(3,3)-T(-1,1))", "latex: " + latex);
  o.require(ms < kWorkedExampleLimitMs, "took " + std::to_string(ms) + " ms");
  o.note = o.ok ? latex + ", " + std::to_string(ms) + " ms" : o.note;
  return o;
}

Outcome rerouted_form() {
  Outcome o;
  const StraightLoop p1(1, 2), p2(2, 1);
  const Rational at[] = {0, q(1, 3), q(2, 3)};
  const QLaurent plus[] = {qpow(3, 2), qpow(1, 2), qpow(-1, 2)};
  const QLaurent minus[] = {qpow(-3, 2), qpow(-1, 2), qpow(1, 2)};
  const auto crossings = enumerate_along_p1(p1, p2);
  o.require(crossings.size() == 3, "expected three crossings");
  AlgebraElement assembled;
  for (std::size_t i = 0; i < 3 && o.ok; ++i) {
    o.require(crossings[i].lift_param == at[i], "crossing order");
    const AlgebraElement tp = rerouting_trace(reroute(p1, p2, crossings[i], +1));
    const AlgebraElement tm = rerouting_trace(reroute(p1, p2, crossings[i], -1));
    o.require(tp == term(3, 3, plus[i]), "positive rerouting at " + to_string(at[i]) + ": " + to_text(tp));
    o.require(tm == term(-1, 1, minus[i]), "negative rerouting at " + to_string(at[i]) + ": " + to_text(tm));
    assembled += (qpow(-1) - QLaurent::constant(1)) * tp + (qpow(1) - QLaurent::constant(1)) * tm;
  }
  o.require(assembled == commutator_straight(1, 2, 2, 1), "assembled sum differs");
  o.require(goldman_quantum(p1, p2) == commutator_straight(1, 2, 2, 1), "goldman_quantum differs");
  if (o.ok) o.note = "six reroutings";
  return o;
}

Outcome intersection_tables() {
  Outcome o;
  struct Case {
    StraightLoop p1, p2;
    std::vector<RatPoint> positions;
    long index;
    long total;
  };
  const Case cases[] = {
      {{1, 0}, {0, 1}, {{0, 0}}, 1, 1},
      {{2, 1}, {0, 1}, {{0, 0}, {0, q(1, 2)}}, 1, 2},
      {{1, 2}, {2, 1}, {{0, 0}, {q(1, 3), q(2, 3)}, {q(2, 3), q(1, 3)}}, -1, -3},
      {{1, 1}, {-1, 2}, {{0, 0}, {q(1, 3), q(1, 3)}, {q(2, 3), q(2, 3)}}, 1, 3},
  };
  for (const Case& c : cases) {
    const std::string label = pair_str(c.p1.m(), c.p1.n(), c.p2.m(), c.p2.n());
    const auto pts = enumerate_points(c.p1, c.p2);
    o.require(pts.size() == c.positions.size(), label + ": point count");
    long sum = 0;
    for (std::size_t i = 0; i < pts.size() && i < c.positions.size(); ++i) {
      o.require(pts[i].position == c.positions[i], label + ": position " + std::to_string(i));
      o.require(pts[i].index == c.index, label + ": index");
      sum += pts[i].index;
    }
    o.require(sum == c.total && total_intersection_number(c.p1, c.p2) == c.total, label + ": total");
    std::set<RatPoint> expected(c.positions.begin(), c.positions.end());
    o.require(oracle::reduced_crossings(c.p1.m(), c.p1.n(), c.p2.m(), c.p2.n()) == expected,
              label + ": brute-force positions");
  }
  // The lift's end point (1,1) is the basepoint on the torus and is counted once.
  const auto pts = enumerate_points({1, 2}, {2, 1});
  for (const auto& p : pts) o.require(lift_point({1, 2}, p) != RatPoint(1, 1), "(1,1) listed separately");
  if (o.ok) o.note = "totals +1, +2, -3, +3";
  return o;
}

Outcome determinant_law() {
  Outcome o;
  const auto t0 = Clock::now();
  long pairs = 0;
  for_each_pair(kSweep, [&](long m, long n, long s, long t) {
    if ((m == 0 && n == 0) || (s == 0 && t == 0) || m * t - n * s == 0) return;
    const StraightLoop p1(m, n), p2(s, t);
    long geo = 0, lift = 0;
    for (const auto& p : enumerate_points(p1, p2)) geo += p.index;
    for (const auto& p : enumerate_along_p1(p1, p2)) lift += p.index;
    o.require(geo == m * t - n * s && lift == m * t - n * s, pair_str(m, n, s, t));
    ++pairs;
  });
  const double s = seconds_since(t0);
  o.require(s < kDeterminantSweepLimitS, "took " + std::to_string(s) + " s");
  if (o.ok) o.note = std::to_string(pairs) + " transversal pairs, " + std::to_string(s) + " s";
  return o;
}

Outcome bracket_equality() {
  Outcome o;
  long pairs = 0;
  for_each_pair(kSweep, [&](long m, long n, long s, long t) {
    if ((m == 0 && n == 0) || (s == 0 && t == 0)) return;
    o.require(goldman_quantum({m, n}, {s, t}) == commutator_straight(m, n, s, t), pair_str(m, n, s, t));
    ++pairs;
  });
  {
    const BracketReport r = verify_bracket_equality({2, 0}, {1, 2});
    AlgebraElement positive;
    for (const auto& row : r.rows) positive += (qpow(1) - QLaurent::constant(1)) * row.positive;
    o.require(r.rows.size() == 4 && r.equal(), "(2,0),(1,2)");
    o.require(positive.coefficient(3, 2) == qpow(2) - qpow(-2), "(2,0),(1,2): T(3,2) coefficient");
  }
  {
    const BracketReport r = verify_bracket_equality({2, 1}, {0, 2});
    AlgebraElement positive;
    for (const auto& row : r.rows) positive += (qpow(2) - QLaurent::constant(1)) * row.positive;
    o.require(r.rows.size() == 2 && r.equal(), "(2,1),(0,2)");
    o.require(positive == term(2, 3, qpow(2) - qpow(-2)), "(2,1),(0,2): T(2,3) coefficient");
  }
  if (o.ok) o.note = std::to_string(pairs) + " pairs, zero difference";
  return o;
}

Outcome area_phase() {
  Outcome o;
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<long> coord(-4, 4);
  for (int i = 0; i < kRandomPaths; ++i) {
    const RatPoint end(coord(rng), coord(rng));
    const PLPath p = random_path_to(rng, end);
    const PLPath p2 = random_path_to(rng, end);
    const HolonomyWord w = holonomy_of_path(p), w2 = holonomy_of_path(p2);
    const Rational s = signed_area_between(p, p2);
    o.require(w.alpha == w2.alpha && w.beta == w2.beta && w.phase - w2.phase == s, "phase: " + to_text(p));
    o.require(s == oracle::winding_area_between(p, p2), "oracle: " + to_text(p) + " vs " + to_text(p2));
  }
  if (o.ok) o.note = std::to_string(kRandomPaths) + " random path pairs";
  return o;
}

Outcome representation_axioms() {
  Outcome o;
  std::mt19937_64 rng(202);
  std::uniform_int_distribution<long> coord(-4, 4);
  for (int i = 0; i < kRandomPaths; ++i) {
    const RatPoint e1(coord(rng), coord(rng)), e2(coord(rng), coord(rng));
    const PLPath p1 = random_path_to(rng, e1), p2 = random_path_to(rng, e1), p3 = random_path_to(rng, e1);
    o.require(signed_area_between(p1, p3) == signed_area_between(p1, p2) + signed_area_between(p2, p3), "chain");
    const PLPath a = random_path_to(rng, e1), b = random_path_to(rng, e2);
    const PLPath c = random_path_to(rng, e1), d = random_path_to(rng, e2);
    o.require(signed_area_between(concat(a, b), concat(c, d)) == signed_area_between(a, c) + signed_area_between(b, d),
              "concatenation");
  }
  if (o.ok) o.note = std::to_string(kRandomPaths) + " triples and quadruples";
  return o;
}

Outcome pick() {
  Outcome o;
  std::mt19937_64 rng(303);
  for (int i = 0; i < kRandomPolygons; ++i) {
    const LatticePolygon poly = oracle::random_simple_polygon(rng);
    o.require(pick_area(poly).area == oracle::shoelace_abs(poly), "random polygon " + std::to_string(i));
  }
  // Cut the (2,1),(1,2) parallelogram along the direction (1,2) through its
  // interior lattice points (1,1) and (2,2): three strips of unit area.
  using P = LatticePolygon::Point;
  const PickCount whole = pick_area(LatticePolygon({P{0, 0}, P{2, 1}, P{3, 3}, P{1, 2}}));
  o.require(whole.area == 3 && whole.interior == 2, "parallelogram area 3 with two interior points");
  const RatPoint u(2, 1), v(1, 2);
  Rational strips = 0;
  for (long k = 0; k < 3; ++k) {
    const RatPoint a = q(k, 3) * u, b = q(k + 1, 3) * u;
    const Rational area = signed_area_loop(PLPath({a, b, b + v, a + v, a}));
    o.require(area == 1, "strip " + std::to_string(k));
    strips += area;
  }
  o.require(strips == whole.area, "strips do not tile");
  const PickCount reglued = pick_area(LatticePolygon({P{1, 1}, P{2, 2}, P{4, 3}, P{3, 2}}));
  o.require(reglued.area == 1 && reglued.interior == 0 && reglued.boundary == 4, "reglued parallelogram");
  if (o.ok) o.note = std::to_string(kRandomPolygons) + " polygons, three unit strips";
  return o;
}

Outcome modular() {
  Outcome o;
  const RelationsReport rel = check_relations(true);
  for (const auto& c : rel.checks) o.require(c.passed, c.name);
  const ModularMatrix S = ModularMatrix::S(), T = ModularMatrix::T();
  const HolonomyWord u1 = segment_word(1, 0), u2 = segment_word(0, 1);
  o.require(S * S * S * S == ModularMatrix::identity(), "S^4");
  o.require((S * T) * (S * T) * (S * T) == ModularMatrix::identity(), "(ST)^3");
  o.require(act_on_holonomy(T, PLPath::straight(1, 0)) == HolonomyWord{q(-1, 2), 0, 0} * u1 * u2, "T.U1");
  o.require(act_on_holonomy(T, PLPath::straight(-1, 0)) == HolonomyWord{q(1, 2), 0, 0} * u2.inverse() * u1.inverse(),
            "T.U1^-1");

  std::mt19937_64 rng(404);
  std::uniform_int_distribution<int> gen(0, 3);
  std::uniform_int_distribution<long> coord(-3, 3);
  const ModularMatrix gens[] = {S, T, S.inverse(), T.inverse()};
  for (int i = 0; i < kRandomMatrices; ++i) {
    ModularMatrix M = ModularMatrix::identity();
    for (int k = 0; k < 8; ++k) M = M * gens[gen(rng)];
    const RatPoint end(coord(rng), coord(rng));
    const PLPath p = random_path_to(rng, end), p2 = random_path_to(rng, end);
    o.require(signed_area_between(act_on_path(M, p), act_on_path(M, p2)) == signed_area_between(p, p2), "area");
    for (long m = -2; m <= 2; ++m)
      for (long n = -2; n <= 2; ++n) {
        if (m == 0 && n == 0) continue;
        const StraightLoop a(m, n);
        for (const StraightLoop& b : {StraightLoop(1, 2), StraightLoop(-3, 1), StraightLoop(2, 0)})
          o.require(total_intersection_number(act_on_loop(M, a), act_on_loop(M, b)) == total_intersection_number(a, b),
                    "intersection number");
      }
  }
  if (o.ok) o.note = std::to_string(rel.checks.size()) + " relations, " + std::to_string(kRandomMatrices) + " matrices";
  return o;
}

Outcome jacobi() {
  Outcome o;
  const auto t0 = Clock::now();
  std::vector<AlgebraElement> basis;
  for (long m = -3; m <= 3; ++m)
    for (long n = -3; n <= 3; ++n)
      if (LoopClass::canonical(m, n) == LoopClass{m, n} && !(m == 0 && n == 0)) basis.push_back(t_straight(m, n));
  long triples = 0;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const AlgebraElement ab = commutator(basis[i], basis[j]);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        const AlgebraElement cyc = commutator(ab, basis[k]) + commutator(commutator(basis[j], basis[k]), basis[i]) +
                                   commutator(commutator(basis[k], basis[i]), basis[j]);
        o.require(cyc.is_zero(), to_text(basis[i]) + ", " + to_text(basis[j]) + ", " + to_text(basis[k]));
        ++triples;
      }
    }
  const double s = seconds_since(t0);
  o.require(s < kJacobiLimitS, "took " + std::to_string(s) + " s");
  if (o.ok) o.note = std::to_string(triples) + " triples, " + std::to_string(s) + " s";
  return o;
}

Outcome classical_limit_sweep() {
  Outcome o;
  for_each_pair(kSweep, [&](long m, long n, long s, long t) {
    o.require(classical_limit(commutator_straight(m, n, s, t)) == poisson_bracket(m, n, s, t), pair_str(m, n, s, t));
  });
  if (o.ok) o.note = "entries in [-6,6]";
  return o;
}

Outcome clock_and_shift() {
  Outcome o;
  double worst = 0;
  auto check = [&](const oracle::Matrix& a, const oracle::Matrix& b, const std::string& what) {
    const double err = oracle::relative_error(a, b);
    worst = std::max(worst, err);
    o.require(err < kMatrixRelTol, what + " (" + std::to_string(err) + ")");
  };
  for (int n : {5, 7, 9}) {
    const oracle::ClockShift cs(n);
    const std::string tag = "N=" + std::to_string(n) + ": ";
    const HolonomyWord u1 = segment_word(1, 0), u2 = segment_word(0, 1);
    check(cs.word(u1) * cs.word(u2), cs.q_power(1) * cs.word(u2) * cs.word(u1), tag + "U1 U2 = q U2 U1");
    check(cs.word(u1) * cs.word(u2), cs.q_power(q(1, 2)) * cs.word({0, 1, 1}), tag + "U1 U2 = q^{1/2} U(1,1)");

    std::mt19937_64 rng(500 + n);
    std::uniform_int_distribution<long> coord(-3, 3);
    RandomPathOptions lattice;
    lattice.coordinate_bound = 3;
    lattice.max_denominator = 1;
    for (int i = 0; i < 40; ++i) {
      const RatPoint end(coord(rng), coord(rng));
      const PLPath p = random_path_to(rng, end, lattice), p2 = random_path_to(rng, end, lattice);
      oracle::Matrix prod = oracle::Matrix::Identity(n, n);
      for (std::size_t k = 0; k < p.segment_count(); ++k) prod = prod * cs.word(segment_word(p.step(k).x, p.step(k).y));
      check(prod, cs.word(holonomy_of_path(p)), tag + "path product " + to_text(p));
      check(cs.word(holonomy_of_path(p)), cs.q_power(signed_area_between(p, p2)) * cs.word(holonomy_of_path(p2)),
            tag + "area phase " + to_text(p));
    }
    for (long a = -3; a <= 3; ++a)
      for (long b = -3; b <= 3; ++b)
        for (long c = -3; c <= 3; ++c)
          for (long d = -3; d <= 3; ++d) {
            const auto ta = cs.trace_image(t_straight(a, b));
            const auto tb = cs.trace_image(t_straight(c, d));
            check(ta * tb - tb * ta, cs.trace_image(commutator_straight(a, b, c, d)),
                  tag + "commutator " + pair_str(a, b, c, d));
          }
  }
  if (o.ok) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "N=5,7,9, max rel. error %.2e", worst);
    o.note = buf;
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"worked commutator (1,2),(2,1)", worked_commutator},
      {"rerouted form from six reroutings", rerouted_form},
      {"intersection tables", intersection_tables},
      {"determinant law, entries in [-6,6]", determinant_law},
      {"bracket forms agree, entries in [-6,6]", bracket_equality},
      {"area-phase theorem and winding oracle", area_phase},
      {"chain and concatenation laws", representation_axioms},
      {"Pick's theorem and unit strips", pick},
      {"modular group suite", modular},
      {"Jacobi identity, entries in [-3,3]", jacobi},
      {"classical limit is the Poisson bracket", classical_limit_sweep},
      {"clock-and-shift matrices", clock_and_shift},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out.ok = false;
      out.note = std::string("exception: ") + e.what();
    }
    std::printf("%s  %2zu  %-42s %s\n", out.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), out.note.c_str());
    std::fflush(stdout);
    failed += out.ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
