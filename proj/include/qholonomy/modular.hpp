#pragma once

// SL(2,Z) acting linearly on lifts of torus loops. The action on holonomies is
// derived from the path action: M.U_p = U_{M.p}.

#include <string>
#include <vector>

#include "qholonomy/geometry.hpp"
#include "qholonomy/holonomy.hpp"
#include "qholonomy/intersections.hpp"

namespace qholo {

class ModularMatrix {
 public:
  /// [[a, b], [c, d]]; throws std::invalid_argument unless ad - bc = 1.
  ModularMatrix(long a, long b, long c, long d);

  static ModularMatrix identity() { return {1, 0, 0, 1}; }
  /// T = [[1,0],[1,1]].
  static ModularMatrix T() { return {1, 0, 1, 1}; }
  /// S = [[0,-1],[1,0]].
  static ModularMatrix S() { return {0, -1, 1, 0}; }

  long a() const { return a_; }
  long b() const { return b_; }
  long c() const { return c_; }
  long d() const { return d_; }

  ModularMatrix inverse() const { return {d_, -b_, -c_, a_}; }
  RatPoint apply(const RatPoint& p) const;

  friend ModularMatrix operator*(const ModularMatrix& x, const ModularMatrix& y);
  friend bool operator==(const ModularMatrix&, const ModularMatrix&) = default;

 private:
  long a_, b_, c_, d_;
};

PLPath act_on_path(const ModularMatrix& M, const PLPath& p);
StraightLoop act_on_loop(const ModularMatrix& M, const StraightLoop& p);
HolonomyWord act_on_holonomy(const ModularMatrix& M, const PLPath& p);

/// The path transformation behind (M.phi)(p) = phi(M^{-1}.p).
PLPath dual_act(const ModularMatrix& M, const PLPath& p);

struct RelationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct RelationsReport {
  std::vector<RelationCheck> checks;
  /// Whether the phase-free classical generator images were also checked.
  bool classical_variant = false;

  bool all_passed() const;
};

/// Generator relations as matrices and through the path and holonomy actions,
/// the generator images on U1 and U2, and preservation of U1 U2 = q U2 U1.
RelationsReport check_relations(bool include_classical_variant = true);

}  // namespace qholo
