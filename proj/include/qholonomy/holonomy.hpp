#pragma once

// Quantum holonomies of the constant diagonal connection A = (r1 dx + r2 dy) sigma3.
// With [r1, r2] a c-number every product of segment holonomies collapses to
// the normal form q^k exp((alpha r1 + beta r2) sigma3), stored as (k, alpha, beta).

#include <Eigen/Core>

#include <complex>

#include "qholonomy/geometry.hpp"
#include "qholonomy/rational.hpp"

namespace qholo {

struct HolonomyWord {
  Rational phase;  // k in q^k
  Rational alpha;  // coefficient of r1
  Rational beta;   // coefficient of r2

  static HolonomyWord identity() { return {}; }
  HolonomyWord inverse() const { return {-phase, -alpha, -beta}; }

  friend bool operator==(const HolonomyWord&, const HolonomyWord&) = default;
};

/// q = e^{i theta}. For the gravity parameterization theta = -hbar sqrt(-Lambda) / 4.
struct QAngle {
  double theta = 0.0;

  static QAngle from_hbar_lambda(double hbar, double cosmological_constant);
};

/// exp((a r1 + b r2) sigma3) for a segment with displacement (a, b).
HolonomyWord segment_word(const Rational& a, const Rational& b);

/// Normal-ordered product: phases add plus half the commutator of the exponents.
HolonomyWord word_mul(const HolonomyWord& w1, const HolonomyWord& w2);

inline HolonomyWord operator*(const HolonomyWord& a, const HolonomyWord& b) { return word_mul(a, b); }

/// Ordered product of the segment words of p.
HolonomyWord holonomy_of_path(const PLPath& p);

/// e^{i theta k} diag(e^{alpha r1 + beta r2}, e^{-alpha r1 - beta r2}).
Eigen::Matrix2cd evaluate_numeric(const HolonomyWord& w, double r1, double r2, QAngle q);

}  // namespace qholo
