#include "qholonomy/verify.hpp"

#include <algorithm>
#include <functional>

#include "qholonomy/goldman.hpp"
#include "qholonomy/holonomy.hpp"
#include "qholonomy/intersections.hpp"
#include "qholonomy/io.hpp"
#include "qholonomy/loop_algebra.hpp"
#include "qholonomy/modular.hpp"

namespace qholo {

namespace {

Rational random_coordinate(std::mt19937_64& rng, const RandomPathOptions& opts) {
  std::uniform_int_distribution<long> den_dist(1, opts.max_denominator);
  const long den = den_dist(rng);
  std::uniform_int_distribution<long> num_dist(-opts.coordinate_bound * den, opts.coordinate_bound * den);
  return make_rational(num_dist(rng), den);
}

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (ok) return;
    if (result_.failures++ == 0) result_.first_failure = describe();
  }

  SuiteResult finish() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string loops_str(long m, long n, long s, long t) {
  return "(" + std::to_string(m) + "," + std::to_string(n) + "),(" + std::to_string(s) + "," + std::to_string(t) + ")";
}

template <typename F>
void for_each_pair(long bound, F&& f) {
  for (long m = -bound; m <= bound; ++m)
    for (long n = -bound; n <= bound; ++n)
      for (long s = -bound; s <= bound; ++s)
        for (long t = -bound; t <= bound; ++t) f(m, n, s, t);
}

}  // namespace

PLPath random_path_to(std::mt19937_64& rng, const RatPoint& end, const RandomPathOptions& opts) {
  std::uniform_int_distribution<int> seg_dist(1, opts.max_segments);
  while (true) {
    const int segments = seg_dist(rng);
    std::vector<RatPoint> v{RatPoint(0, 0)};
    for (int i = 1; i < segments; ++i) v.emplace_back(random_coordinate(rng, opts), random_coordinate(rng, opts));
    v.push_back(end);
    bool ok = true;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) ok = ok && v[i] != v[i + 1];
    if (ok) return PLPath(std::move(v));
  }
}

PLPath random_lattice_path(std::mt19937_64& rng, const RandomPathOptions& opts) {
  std::uniform_int_distribution<long> dist(-opts.coordinate_bound, opts.coordinate_bound);
  return random_path_to(rng, RatPoint(dist(rng), dist(rng)), opts);
}

bool VerifyReport::all_passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

VerifyReport run_verification(long sweep, std::uint64_t seed, int random_cases) {
  VerifyReport report;
  report.sweep = sweep;
  report.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-4, 4);

  auto random_end = [&] { return RatPoint(coord(rng), coord(rng)); };

  {
    Suite s("signed area: antisymmetry and translation invariance");
    for (int i = 0; i < random_cases; ++i) {
      const RatPoint end = random_end();
      const PLPath p = random_path_to(rng, end);
      const PLPath p2 = random_path_to(rng, end);
      const Rational a = signed_area_between(p, p2);
      s.check(a == -signed_area_between(p2, p), [&] { return "antisymmetry: " + to_text(p) + " vs " + to_text(p2); });
      s.check(signed_area_between(p, p) == 0, [&] { return "S(p,p) != 0 for " + to_text(p); });
      const RatPoint shift = random_end();
      std::vector<RatPoint> v1, v2;
      for (const RatPoint& x : p.vertices()) v1.push_back(x + shift);
      for (const RatPoint& x : p2.vertices()) v2.push_back(x + shift);
      s.check(signed_area_between(PLPath(v1), PLPath(v2)) == a, [&] { return "translation: " + to_text(p); });
    }
    report.suites.push_back(s.finish());
  }
  {
    Suite s("representation axioms: chain additivity and concatenation");
    for (int i = 0; i < random_cases; ++i) {
      const RatPoint end = random_end();
      const PLPath p1 = random_path_to(rng, end);
      const PLPath p2 = random_path_to(rng, end);
      const PLPath p3 = random_path_to(rng, end);
      s.check(signed_area_between(p1, p3) == signed_area_between(p1, p2) + signed_area_between(p2, p3),
              [&] { return "chain: " + to_text(p1) + " | " + to_text(p2) + " | " + to_text(p3); });
      const RatPoint end2 = random_end();
      const PLPath p4 = random_path_to(rng, end2);
      const PLPath p5 = random_path_to(rng, end2);
      s.check(signed_area_between(concat(p1, p4), concat(p3, p5)) ==
                  signed_area_between(p1, p3) + signed_area_between(p4, p5),
              [&] { return "concatenation: " + to_text(p1) + " | " + to_text(p4); });
    }
    report.suites.push_back(s.finish());
  }
  {
    Suite s("area-phase theorem: U_p = q^S(p,p') U_p'");
    for (int i = 0; i < random_cases; ++i) {
      const RatPoint end = random_end();
      const PLPath p = random_path_to(rng, end);
      const PLPath p2 = random_path_to(rng, end);
      const HolonomyWord w = holonomy_of_path(p);
      const HolonomyWord w2 = holonomy_of_path(p2);
      s.check(w.alpha == w2.alpha && w.beta == w2.beta && w.phase - w2.phase == signed_area_between(p, p2),
              [&] { return to_text(p) + " vs " + to_text(p2); });
      s.check(holonomy_of_path(concat(p, p2)) == holonomy_of_path(p) * holonomy_of_path(p2),
              [&] { return "multiplicativity: " + to_text(p); });
    }
    report.suites.push_back(s.finish());
  }
  {
    Suite s("parallelogram and triangle relations");
    for_each_pair(sweep, [&](long m, long n, long a, long b) {
      const HolonomyWord u = segment_word(m, n);
      const HolonomyWord v = segment_word(a, b);
      const Rational det(m * b - n * a);
      const HolonomyWord uv = u * v;
      const HolonomyWord vu = v * u;
      s.check(uv.alpha == vu.alpha && uv.beta == vu.beta && uv.phase - vu.phase == det,
              [&] { return "parallelogram " + loops_str(m, n, a, b); });
      s.check(uv == HolonomyWord{det / 2, Rational(m + a), Rational(n + b)},
              [&] { return "triangle " + loops_str(m, n, a, b); });
    });
    report.suites.push_back(s.finish());
  }
  {
    Suite s("intersection determinant law");
    for_each_pair(sweep, [&](long m, long n, long a, long b) {
      if ((m == 0 && n == 0) || (a == 0 && b == 0) || m * b - n * a == 0) return;
      const StraightLoop p1(m, n), p2(a, b);
      long geometric = 0, lift = 0;
      for (const IntersectionPoint& q : enumerate_points(p1, p2)) geometric += q.index;
      for (const IntersectionPoint& q : enumerate_along_p1(p1, p2)) lift += q.index;
      const long det = m * b - n * a;
      s.check(geometric == det && lift == det && total_intersection_number(p1, p2) == det,
              [&] { return loops_str(m, n, a, b); });
    });
    report.suites.push_back(s.finish());
  }
  {
    Suite s("quantum Goldman bracket equals straight commutator");
    for_each_pair(sweep, [&](long m, long n, long a, long b) {
      if ((m == 0 && n == 0) || (a == 0 && b == 0)) return;
      const StraightLoop p1(m, n), p2(a, b);
      s.check(goldman_quantum(p1, p2) == commutator_straight(m, n, a, b), [&] { return loops_str(m, n, a, b); });
    });
    report.suites.push_back(s.finish());
  }
  {
    Suite s("classical limit of the commutator is the Poisson bracket");
    for_each_pair(sweep, [&](long m, long n, long a, long b) {
      s.check(classical_limit(commutator_straight(m, n, a, b)) == poisson_bracket(m, n, a, b),
              [&] { return loops_str(m, n, a, b); });
    });
    report.suites.push_back(s.finish());
  }
  {
    Suite s("Jacobi identity");
    const long bound = std::min<long>(sweep, 3);
    std::vector<AlgebraElement> basis;
    for (long m = -bound; m <= bound; ++m) {
      for (long n = -bound; n <= bound; ++n) {
        const LoopClass c = LoopClass::canonical(m, n);
        if (c.m == m && c.n == n && !c.is_trivial()) basis.push_back(t_straight(m, n));
      }
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const AlgebraElement ab = commutator(basis[i], basis[j]);
        for (std::size_t k = 0; k < basis.size(); ++k) {
          const AlgebraElement cyclic = commutator(ab, basis[k]) + commutator(commutator(basis[j], basis[k]), basis[i]) +
                                        commutator(commutator(basis[k], basis[i]), basis[j]);
          s.check(cyclic.is_zero(), [&] { return to_text(basis[i]) + ", " + to_text(basis[j]) + ", " + to_text(basis[k]); });
        }
      }
    }
    report.suites.push_back(s.finish());
  }
  {
    Suite s("modular group relations");
    const RelationsReport rel = check_relations(true);
    for (const RelationCheck& c : rel.checks) s.check(c.passed, [&] { return c.name; });
    report.suites.push_back(s.finish());
  }
  return report;
}

}  // namespace qholo
