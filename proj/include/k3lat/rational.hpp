#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace k3lat {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p" or "p/q" (no decimal point, no exponent). The result is canonical.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }

/// floor and ceil of a rational.
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

/// Least common multiple of the denominators of a range of rationals.
template <class Range>
Integer common_denominator(const Range& values) {
  Integer d = 1;
  for (const Rational& q : values) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
  return d;
}

}  // namespace k3lat
