#include "qchar/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qchar {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) {
    s.remove_prefix(1);
  }
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  std::string num_str(num);
  if (num_str.front() == '+') {
    num_str.erase(0, 1);
  }
  Integer n(num_str, 10);
  Integer d(std::string(den), 10);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  Rational r = value;
  r.canonicalize();
  if (r.get_den() == 1) {
    return r.get_num().get_str();
  }
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational ipow(const Rational& base, long exponent) {
  if (exponent == 0) {
    return Rational(1);
  }
  if (base == 0) {
    if (exponent < 0) {
      throw std::domain_error("negative power of zero");
    }
    return Rational(0);
  }
  const unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                       : static_cast<unsigned long>(exponent);
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational r = exponent < 0 ? Rational(den, num) : Rational(num, den);
  r.canonicalize();  // fixes the sign when num < 0
  return r;
}

QParam::QParam(Rational value) : value_(std::move(value)) {
  value_.canonicalize();
  if (!(value_ > 0 && value_ < 1)) {
    throw std::domain_error("q must lie strictly between 0 and 1, got " + to_string(value_));
  }
}

QParam parse_q(std::string_view text) { return QParam(parse_rational(text)); }

}  // namespace qchar
