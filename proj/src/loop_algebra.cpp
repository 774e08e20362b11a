#include "qholonomy/loop_algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace qholo {

QLaurent QLaurent::monomial(const Rational& exponent, const Rational& coeff) {
  QLaurent out;
  out.add_term(exponent, coeff);
  return out;
}

void QLaurent::add_term(const Rational& exponent, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational QLaurent::coefficient(const Rational& exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::complex<double> QLaurent::evaluate(double theta) const {
  std::complex<double> sum = 0.0;
  for (const auto& [k, c] : terms_) sum += c.get_d() * std::polar(1.0, theta * k.get_d());
  return sum;
}

Rational QLaurent::derivative_at_one() const {
  Rational sum = 0;
  for (const auto& [k, c] : terms_) sum += k * c;
  return sum;
}

Rational QLaurent::value_at_one() const {
  Rational sum = 0;
  for (const auto& [k, c] : terms_) sum += c;
  return sum;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

QLaurent operator-(const QLaurent& a) {
  QLaurent out;
  for (const auto& [k, c] : a.terms_) out.terms_.emplace(k, -c);
  return out;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
  }
  return out;
}

LoopClass LoopClass::canonical(long m, long n) {
  if (n < 0 || (n == 0 && m < 0)) return {-m, -n};
  return {m, n};
}

QLaurent AlgebraElement::coefficient(long m, long n) const {
  const auto it = terms_.find(LoopClass::canonical(m, n));
  return it == terms_.end() ? QLaurent{} : it->second;
}

void AlgebraElement::add_term(long m, long n, const QLaurent& c) {
  if (c.is_zero()) return;
  const LoopClass key = LoopClass::canonical(m, n);
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [cls, c] : o.terms_) add_term(cls.m, cls.n, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [cls, c] : o.terms_) add_term(cls.m, cls.n, -c);
  return *this;
}

AlgebraElement operator-(const AlgebraElement& a) {
  AlgebraElement out;
  for (const auto& [cls, c] : a.terms_) out.terms_.emplace(cls, -c);
  return out;
}

AlgebraElement operator*(const QLaurent& c, const AlgebraElement& e) {
  AlgebraElement out;
  for (const auto& [cls, coeff] : e.terms_) out.add_term(cls.m, cls.n, c * coeff);
  return out;
}

AlgebraElement t_straight(long m, long n) {
  AlgebraElement out;
  out.add_term(m, n, QLaurent::constant(1));
  return out;
}

AlgebraElement t_of_path(const PLPath& p) {
  if (p.start() != RatPoint(0, 0)) throw std::invalid_argument("t_of_path expects a path from the origin");
  const RatPoint end = p.end();
  if (!end.is_integer()) throw std::invalid_argument("t_of_path expects an integer endpoint");
  const long m = to_long(end.x);
  const long n = to_long(end.y);
  const Rational area = signed_area_between(p, PLPath::straight(end.x, end.y));
  AlgebraElement out;
  out.add_term(m, n, QLaurent::monomial(area));
  return out;
}

AlgebraElement poisson_bracket(long m, long n, long s, long t) {
  const long det = m * t - n * s;
  AlgebraElement out;
  if (det == 0) return out;
  out.add_term(m + s, n + t, QLaurent::constant(det));
  out.add_term(m - s, n - t, QLaurent::constant(-det));
  return out;
}

AlgebraElement commutator_straight(long m, long n, long s, long t) {
  const Rational half_det = make_rational(m * t - n * s, 2);
  const QLaurent prefactor = QLaurent::monomial(half_det) - QLaurent::monomial(-half_det);
  AlgebraElement out;
  out.add_term(m + s, n + t, prefactor);
  out.add_term(m - s, n - t, -prefactor);
  return out;
}

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [ca, xa] : a.terms()) {
    for (const auto& [cb, xb] : b.terms()) {
      if (ca.is_trivial() || cb.is_trivial()) continue;
      out += (xa * xb) * commutator_straight(ca.m, ca.n, cb.m, cb.n);
    }
  }
  return out;
}

AlgebraElement classical_limit(const AlgebraElement& e) {
  AlgebraElement out;
  for (const auto& [cls, c] : e.terms()) out.add_term(cls.m, cls.n, QLaurent::constant(c.derivative_at_one()));
  return out;
}

std::complex<double> numeric_trace(const AlgebraElement& e, double r1, double r2, QAngle q) {
  std::complex<double> sum = 0.0;
  for (const auto& [cls, c] : e.terms()) {
    const double x = static_cast<double>(cls.m) * r1 + static_cast<double>(cls.n) * r2;
    sum += c.evaluate(q.theta) * (std::exp(x) + std::exp(-x));
  }
  return sum;
}

}  // namespace qholo
