#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace parasl2 {

/// Exact rational scalar. mpq_class keeps the canonical form
/// (positive denominator, coprime parts) after every arithmetic operation.
using Rational = mpq_class;

/// num/den in canonical form. mpq_class(num, den) alone does not reduce, and
/// comparisons of unreduced values are wrong. Throws not_a_unit for den = 0.
Rational make_rational(long num, long den);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& x);

inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// Multiplicative inverse; throws not_a_unit for zero.
Rational inverse(const Rational& x);

Rational factorial(unsigned n);
Rational pow(const Rational& base, int exponent);

}  // namespace parasl2
