#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace domgreedy {

// Exact rationals backed by GMP. mpq_class keeps results of arithmetic in
// canonical form; values built from a numerator/denominator pair must go
// through make_rational().
using Rational = mpq_class;
using Natural = mpz_class;

Rational make_rational(long num, unsigned long den);

/// Parses an integer or `p/q` literal. Decimal points, exponents and
/// zero denominators are rejected with std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p/q" or "p" when the denominator is 1.
std::string to_string(const Rational& r);

Natural ceil(const Rational& r);

/// Double approximations that bracket r: lower <= r <= upper.
double to_double_lower(const Rational& r);
double to_double_upper(const Rational& r);

}  // namespace domgreedy
