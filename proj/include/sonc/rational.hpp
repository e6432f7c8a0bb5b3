#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sonc {

// Exact arithmetic carriers for all coefficients. Values are kept canonical:
// gcd(|num|, den) = 1 and den > 0.
using Integer = mpz_class;
using Rational = mpq_class;

// Throws SoncError on zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "7", "-3", "3/2", "-1/4". Denominator must be a positive integer.
Rational parse_rational(std::string_view text);

// Canonical form: "num" when den == 1, otherwise "num/den".
std::string rational_to_string(const Rational& q);

Rational pow_rational(const Rational& base, unsigned long exponent);

Integer binomial(unsigned long n, unsigned long k);

Integer pow2(unsigned long k);

}  // namespace sonc
