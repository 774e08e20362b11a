#include "qholonomy/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qholo {

namespace {

bool is_signed_digits(std::string_view s, bool allow_sign) {
  if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_signed_digits(num, true) || !is_signed_digits(den, false)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  mpz_class zn(n, 10);
  mpz_class zd(std::string(den), 10);
  if (zd == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(zn, zd);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

mpz_class floor(const Rational& r) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

long to_long(const Rational& r) {
  if (!is_integer(r)) throw std::invalid_argument("expected an integer, got " + to_string(r));
  if (!r.get_num().fits_slong_p()) throw std::overflow_error("integer out of range: " + to_string(r));
  return r.get_num().get_si();
}

}  // namespace qholo
