#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace wreathdet {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q" (surrounding blanks allowed) into a canonical
/// rational. Throws ParseError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or just "p" for integers.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }
inline bool is_zero(const Integer& value) { return sgn(value) == 0; }

/// base^exponent; negative exponents require a nonzero base.
Rational power(const Rational& base, int exponent);

Integer factorial_integer(unsigned n);

/// num/den in lowest terms.
Rational make_rational(const Integer& num, const Integer& den);

}  // namespace wreathdet
