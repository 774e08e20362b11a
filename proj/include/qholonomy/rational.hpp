#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qholo {

// Exact rational scalar used throughout the algebraic and geometric code.
using Rational = mpq_class;

/// num/den in lowest terms. mpq_class's two-argument constructor does not
/// canonicalize, and non-canonical values break comparison.
inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q" (optionally signed, no spaces). Throws
/// std::invalid_argument on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "3/2", "-1/3", "4".
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);

/// Largest integer <= r.
mpz_class floor(const Rational& r);

/// Converts an integral rational to long; throws std::overflow_error if it
/// does not fit, std::invalid_argument if it is not integral.
long to_long(const Rational& r);

}  // namespace qholo
