#pragma once

#include <gmpxx.h>

#include <string>

#include "hasym/real.hpp"

namespace hasym {

/// Exact rational. GMP keeps it canonical: gcd(|num|, den) = 1, den > 0.
using Rational = mpq_class;

/// Parses "p/q" or "p"; the result is canonicalized.
Rational parse_rational(const std::string& text);

/// Builds num/den from decimal strings and canonicalizes.
Rational make_rational(const std::string& num, const std::string& den);

std::string numerator_string(const Rational& q);
std::string denominator_string(const Rational& q);

/// Rounds to the nearest binary128 value (one rounding of a 120-bit
/// quotient, so the result is faithful regardless of operand size).
Real to_real(const Rational& q);

/// Generalized binomial coefficient r(r-1)...(r-j+1)/j! for rational r.
Rational binom(const Rational& r, unsigned j);

/// 4^k as an exact rational (k may be negative).
Rational pow4(int k);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace hasym
