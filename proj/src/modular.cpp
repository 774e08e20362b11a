#include "qholonomy/modular.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qholo {

ModularMatrix::ModularMatrix(long a, long b, long c, long d) : a_(a), b_(b), c_(c), d_(d) {
  if (a * d - b * c != 1) throw std::invalid_argument("matrix is not in SL(2,Z): determinant != 1");
}

RatPoint ModularMatrix::apply(const RatPoint& p) const {
  return {Rational(a_) * p.x + Rational(b_) * p.y, Rational(c_) * p.x + Rational(d_) * p.y};
}

ModularMatrix operator*(const ModularMatrix& x, const ModularMatrix& y) {
  return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
          x.c_ * y.b_ + x.d_ * y.d_};
}

PLPath act_on_path(const ModularMatrix& M, const PLPath& p) {
  std::vector<RatPoint> v;
  v.reserve(p.vertices().size());
  for (const RatPoint& x : p.vertices()) v.push_back(M.apply(x));
  return PLPath(std::move(v));
}

StraightLoop act_on_loop(const ModularMatrix& M, const StraightLoop& p) {
  return {M.a() * p.m() + M.b() * p.n(), M.c() * p.m() + M.d() * p.n()};
}

HolonomyWord act_on_holonomy(const ModularMatrix& M, const PLPath& p) { return holonomy_of_path(act_on_path(M, p)); }

PLPath dual_act(const ModularMatrix& M, const PLPath& p) { return act_on_path(M.inverse(), p); }

bool RelationsReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.passed; });
}

namespace {

ModularMatrix power(const ModularMatrix& M, int k) {
  ModularMatrix out = ModularMatrix::identity();
  for (int i = 0; i < k; ++i) out = out * M;
  return out;
}

PLPath apply_word(const std::vector<ModularMatrix>& word, PLPath p) {
  // Rightmost factor acts first.
  for (auto it = word.rbegin(); it != word.rend(); ++it) p = act_on_path(*it, p);
  return p;
}

std::vector<PLPath> path_battery() {
  auto path = [](std::vector<RatPoint> v) { return PLPath(std::move(v)); };
  return {
      PLPath::straight(1, 0),
      PLPath::straight(2, 1),
      PLPath::straight(-1, 3),
      path({{0, 0}, {1, 0}, {1, 1}}),
      path({{0, 0}, {1, 2}, {3, 3}}),
      path({{0, 0}, {Rational(1, 2), make_rational(3, 2)}, {2, -1}, {3, 2}}),
      path({{0, 0}, {-1, 1}, {make_rational(-1, 3), make_rational(5, 2)}, {2, 2}, {1, -1}}),
  };
}

std::string word_string(const HolonomyWord& w) {
  return "(" + to_string(w.phase) + ", " + to_string(w.alpha) + ", " + to_string(w.beta) + ")";
}

bool preserves_fundamental_relation(const HolonomyWord& u1, const HolonomyWord& u2) {
  const HolonomyWord lhs = u1 * u2;
  const HolonomyWord rhs = u2 * u1;
  return lhs.alpha == rhs.alpha && lhs.beta == rhs.beta && lhs.phase - rhs.phase == 1;
}

}  // namespace

RelationsReport check_relations(bool include_classical_variant) {
  RelationsReport report;
  report.classical_variant = include_classical_variant;
  auto add = [&report](std::string name, bool ok, std::string detail = {}) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  const ModularMatrix S = ModularMatrix::S();
  const ModularMatrix T = ModularMatrix::T();
  const ModularMatrix I = ModularMatrix::identity();
  const ModularMatrix ST = S * T;

  add("S^4 = I (matrix)", power(S, 4) == I);
  add("(ST)^3 = I (matrix)", power(ST, 3) == I);
  const ModularMatrix s2 = power(S, 2);
  add("S^2 = -I (matrix)", s2.a() == -1 && s2.b() == 0 && s2.c() == 0 && s2.d() == -1);

  bool s4_paths = true, st3_paths = true, functorial = true, s2_paths = true, s2_holonomy = true, areas = true;
  const auto battery = path_battery();
  for (const PLPath& p : battery) {
    s4_paths = s4_paths && apply_word({S, S, S, S}, p) == p;
    st3_paths = st3_paths && apply_word({S, T, S, T, S, T}, p) == p;
    for (const ModularMatrix& A : {S, T, ST}) {
      for (const ModularMatrix& B : {S, T, ST}) {
        functorial = functorial && act_on_holonomy(A * B, p) == act_on_holonomy(A, act_on_path(B, p));
      }
    }
    // S^2 is the point reflection; the reflected path ends where inverse(p)
    // ends and their holonomies differ by the area phase between them.
    const PLPath reflected = act_on_path(s2, p);
    std::vector<RatPoint> negated;
    for (const RatPoint& x : p.vertices()) negated.push_back(-x);
    s2_paths = s2_paths && reflected == PLPath(negated);
    const PLPath inv = inverse(p);
    HolonomyWord expected = holonomy_of_path(inv);
    expected.phase += signed_area_between(reflected, inv);
    s2_holonomy = s2_holonomy && holonomy_of_path(reflected) == expected &&
                  holonomy_of_path(inv) == holonomy_of_path(p).inverse();
  }
  for (std::size_t i = 0; i < battery.size(); ++i) {
    for (std::size_t j = 0; j < battery.size(); ++j) {
      if (battery[i].end() != battery[j].end()) continue;
      const Rational before = signed_area_between(battery[i], battery[j]);
      for (const ModularMatrix& M : {S, T, ST}) {
        areas = areas && signed_area_between(act_on_path(M, battery[i]), act_on_path(M, battery[j])) == before;
      }
    }
  }
  add("S^4 acts trivially on paths", s4_paths);
  add("(ST)^3 acts trivially on paths", st3_paths);
  add("(M1 M2).U_p = M1.U_{M2.p}", functorial);
  add("S^2 maps p to -p", s2_paths);
  add("U_{S^2.p} = q^{S(S^2.p, p^-1)} U_p^-1", s2_holonomy);
  add("signed areas preserved", areas);

  const HolonomyWord U1 = segment_word(1, 0);
  const HolonomyWord U2 = segment_word(0, 1);
  const PLPath g1 = PLPath::straight(1, 0);
  const PLPath g2 = PLPath::straight(0, 1);
  const HolonomyWord half = {Rational(-1, 2), 0, 0};

  const HolonomyWord tu1 = act_on_holonomy(T, g1);
  add("T.U1 = q^{-1/2} U1 U2", tu1 == half * U1 * U2, word_string(tu1));
  add("T.U2 = U2", act_on_holonomy(T, g2) == U2);
  add("S.U1 = U2", act_on_holonomy(S, g1) == U2);
  add("S.U2 = U1^{-1}", act_on_holonomy(S, g2) == U1.inverse());
  const HolonomyWord tu1inv = act_on_holonomy(T, inverse(g1));
  add("T.U1^{-1} = q^{1/2} U2^{-1} U1^{-1}", tu1inv == half.inverse() * U2.inverse() * U1.inverse(),
      word_string(tu1inv));

  add("T preserves U1 U2 = q U2 U1", preserves_fundamental_relation(tu1, act_on_holonomy(T, g2)));
  add("S preserves U1 U2 = q U2 U1",
      preserves_fundamental_relation(act_on_holonomy(S, g1), act_on_holonomy(S, g2)));

  if (include_classical_variant) {
    // Phase-free images: T: U1 -> U1 U2, U2 -> U2; S: U1 -> U2, U2 -> U1^{-1}.
    add("classical T preserves U1 U2 = q U2 U1", preserves_fundamental_relation(U1 * U2, U2));
    add("classical S preserves U1 U2 = q U2 U1", preserves_fundamental_relation(U2, U1.inverse()));
    const HolonomyWord classical_tu1 = U1 * U2;
    add("classical T.U1 differs from T.U1 by a phase",
        classical_tu1.alpha == tu1.alpha && classical_tu1.beta == tu1.beta && classical_tu1.phase != tu1.phase,
        "phase " + to_string(classical_tu1.phase - tu1.phase));
  }
  return report;
}

}  // namespace qholo
