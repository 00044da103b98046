#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace weylps {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (decimal integers, q != 0). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q == 1) form.
std::string to_string(const Rational& value);

/// Best rational approximation of x with denominator <= max_denominator
/// (continued-fraction convergents and semiconvergents).
Rational rationalize(double x, long max_denominator);

/// The rational with the smallest denominator in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace weylps
