#pragma once

// The trace algebra spanned by loop-class symbols T(m,n) = tr U_(m,n) with
// coefficients that are Laurent polynomials in q with rational exponents.

#include <complex>
#include <map>

#include "qholonomy/geometry.hpp"
#include "qholonomy/holonomy.hpp"
#include "qholonomy/rational.hpp"

namespace qholo {

/// Finite sum of c_k q^k with rational k and nonzero rational c_k.
class QLaurent {
 public:
  using Terms = std::map<Rational, Rational>;

  QLaurent() = default;
  static QLaurent monomial(const Rational& exponent, const Rational& coeff = 1);
  static QLaurent constant(const Rational& c) { return monomial(0, c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of q^exponent (zero if absent).
  Rational coefficient(const Rational& exponent) const;

  /// Value at q = e^{i theta}.
  std::complex<double> evaluate(double theta) const;
  /// First-order coefficient of c(e^{i theta}) in i theta: sum of k c_k.
  Rational derivative_at_one() const;
  /// c(1): sum of coefficients.
  Rational value_at_one() const;

  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator-(const QLaurent& a);
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);

  friend bool operator==(const QLaurent&, const QLaurent&) = default;

 private:
  void add_term(const Rational& exponent, const Rational& coeff);
  Terms terms_;
};

/// Canonical representative of (m,n) ~ (-m,-n): n > 0, or n == 0 and m >= 0.
struct LoopClass {
  long m = 0;
  long n = 0;

  static LoopClass canonical(long m, long n);
  bool is_trivial() const { return m == 0 && n == 0; }

  friend auto operator<=>(const LoopClass&, const LoopClass&) = default;
};

class AlgebraElement {
 public:
  using Terms = std::map<LoopClass, QLaurent>;

  AlgebraElement() = default;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of the class of (m,n) (zero if absent).
  QLaurent coefficient(long m, long n) const;

  /// Adds c T(m,n), canonicalizing (m,n) first.
  void add_term(long m, long n, const QLaurent& c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator-(const AlgebraElement& a);
  friend AlgebraElement operator*(const QLaurent& c, const AlgebraElement& e);

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  Terms terms_;
};

/// T(m,n) with unit coefficient.
AlgebraElement t_straight(long m, long n);

/// q^{S(p, straight)} T(m,n) for a path from the origin to the integer point
/// (m,n). Throws std::invalid_argument for other endpoints.
AlgebraElement t_of_path(const PLPath& p);

/// {T(m,n), T(s,t)} = (mt - ns)(T(m+s,n+t) - T(m-s,n-t)) with {r1,r2} = 1.
AlgebraElement poisson_bracket(long m, long n, long s, long t);

/// [T(m,n), T(s,t)] = (q^{(mt-ns)/2} - q^{-(mt-ns)/2})(T(m+s,n+t) - T(m-s,n-t)).
AlgebraElement commutator_straight(long m, long n, long s, long t);

/// Bilinear extension of commutator_straight; T(0,0) is central.
AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b);

/// Replaces each coefficient c(q) by its first-order term sum_k k c_k, so that
/// classical_limit([a,b]) = {a,b}.
AlgebraElement classical_limit(const AlgebraElement& e);

/// sum over terms of c(e^{i theta}) (e^{m r1 + n r2} + e^{-m r1 - n r2}).
std::complex<double> numeric_trace(const AlgebraElement& e, double r1, double r2, QAngle q);

}  // namespace qholo
