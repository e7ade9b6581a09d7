#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qshuffle {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q" with the denominator always present ("3/1", "-1/3").
std::string to_fraction_string(const Rational& value);

// Accepts "p", "p/q", optionally signed. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);
Integer binomial(long n, long k);

}  // namespace qshuffle
