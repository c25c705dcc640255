#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace efcert {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "p/q", or a decimal literal such as "-1.25e-3" exactly.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form ("p" when the denominator is 1).
std::string to_string(const Rational& x);

Rational pow(const Rational& base, unsigned long exponent);
Integer factorial(unsigned long n);
Rational abs(const Rational& x);

/// Nearest multiple of 2^-bits.
Rational round_to_grid(const Rational& x, long bits);
/// Smallest multiple of 2^-bits that is >= x.
Rational ceil_to_grid(const Rational& x, long bits);
/// Upper bound for sqrt(x), x >= 0, within a relative 2^-bits.
Rational sqrt_upper(const Rational& x, long bits = 64);
/// Lower bound for sqrt(x), x >= 0.
Rational sqrt_lower(const Rational& x, long bits = 64);

/// floor(log2 |x|) for x != 0.
long floor_log2(const Rational& x);

/// Decimal rendering of x rounded to nearest with `digits` fractional digits.
/// `error` receives |x - rendered value|.
std::string to_decimal(const Rational& x, unsigned digits, Rational* error = nullptr);

/// Decimal rounding of an upper bound: the result is >= x.
std::string to_decimal_upper(const Rational& x, unsigned digits);

Rational pow10(long exponent);

}  // namespace efcert
