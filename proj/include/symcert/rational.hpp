#ifndef SYMCERT_RATIONAL_HPP
#define SYMCERT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace symcert {

/// Exact arbitrary-precision fraction. GMP keeps it canonical (den > 0, reduced)
/// after every arithmetic operation.
using Rational = mpq_class;

/// Parses "p", "-p", or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& r);

/// Display-only decimal with `digits` significant digits, truncated toward zero.
std::string to_decimal(const Rational& r, int digits = 20);

int sign(const Rational& r);

}  // namespace symcert

#endif  // SYMCERT_RATIONAL_HPP
