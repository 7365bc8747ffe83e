#ifndef QCHAR_RATIONAL_HPP
#define QCHAR_RATIONAL_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qchar {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator. Every exact computation in the library is carried out in this
/// type.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "n" (optional leading sign, decimal digits only).
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "n" when the denominator is 1.
std::string to_string(const Rational& value);

/// base^exponent for any integer exponent; base must be nonzero when the
/// exponent is negative (std::domain_error otherwise).
Rational ipow(const Rational& base, long exponent);

/// The deformation parameter q, a rational strictly between 0 and 1.
class QParam {
 public:
  /// Throws std::domain_error unless 0 < value < 1.
  explicit QParam(Rational value);

  const Rational& value() const noexcept { return value_; }
  Rational pow(long exponent) const { return ipow(value_, exponent); }

  friend bool operator==(const QParam& a, const QParam& b) { return a.value_ == b.value_; }

 private:
  Rational value_;
};

/// Shorthand for QParam(parse_rational(text)).
QParam parse_q(std::string_view text);

}  // namespace qchar

#endif  // QCHAR_RATIONAL_HPP
