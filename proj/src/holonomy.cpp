#include "qholonomy/holonomy.hpp"

#include <cmath>
#include <stdexcept>

namespace qholo {

QAngle QAngle::from_hbar_lambda(double hbar, double cosmological_constant) {
  if (cosmological_constant > 0) throw std::domain_error("q is unimodular only for Lambda <= 0");
  return QAngle{-hbar * std::sqrt(-cosmological_constant) / 4.0};
}

HolonomyWord segment_word(const Rational& a, const Rational& b) { return {Rational(0), a, b}; }

HolonomyWord word_mul(const HolonomyWord& w1, const HolonomyWord& w2) {
  HolonomyWord out;
  out.phase = w1.phase + w2.phase + (w1.alpha * w2.beta - w1.beta * w2.alpha) / 2;
  out.alpha = w1.alpha + w2.alpha;
  out.beta = w1.beta + w2.beta;
  return out;
}

HolonomyWord holonomy_of_path(const PLPath& p) {
  HolonomyWord w = HolonomyWord::identity();
  for (std::size_t i = 0; i < p.segment_count(); ++i) {
    const RatPoint s = p.step(i);
    w = word_mul(w, segment_word(s.x, s.y));
  }
  return w;
}

Eigen::Matrix2cd evaluate_numeric(const HolonomyWord& w, double r1, double r2, QAngle q) {
  const double exponent = w.alpha.get_d() * r1 + w.beta.get_d() * r2;
  const std::complex<double> phase = std::polar(1.0, q.theta * w.phase.get_d());
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = phase * std::exp(exponent);
  m(1, 1) = phase * std::exp(-exponent);
  return m;
}

}  // namespace qholo
