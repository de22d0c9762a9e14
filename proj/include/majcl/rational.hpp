#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace majcl {

// mpq_class keeps every value canonical (lowest terms, positive denominator)
// after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long numerator, long denominator);

inline Rational half() { return Rational(1, 2); }

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

// Accepts "p", "-p" and "p/q". Throws Error(ParseError) otherwise.
Rational parse_rational(std::string_view text);

}  // namespace majcl
