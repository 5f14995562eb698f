#pragma once

#include "k3lat/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace k3lat {

/// Square-free radicand, stored as its strictly increasing list of prime factors.
/// The empty list is the radicand 1.
using Radical = std::vector<std::uint32_t>;

enum class Sign { negative = -1, zero = 0, positive = 1 };

/// Product of the primes in a radical.
Integer radicand(const Radical& r);

/// An element of Q(sqrt(p1), ..., sqrt(pk)) for distinct primes p_i, written as
///
///   sum over square-free S of q_S * sqrt(prod S).
///
/// The monomials sqrt(prod S) are linearly independent over Q, so the coefficient
/// map is a canonical form: zero coefficients are never stored and two numbers are
/// equal exactly when their maps are equal. Values are immutable once built.
class MultiquadraticNumber {
 public:
  using Terms = std::map<Radical, Rational>;

  MultiquadraticNumber() = default;
  MultiquadraticNumber(const Rational& q);  // NOLINT(google-explicit-constructor)
  MultiquadraticNumber(long q);             // NOLINT(google-explicit-constructor)

  /// coef * sqrt(prod primes). Throws std::invalid_argument unless the primes are
  /// distinct primes (order does not matter).
  static MultiquadraticNumber radical(Radical primes, const Rational& coef = 1);
  static MultiquadraticNumber sqrt_prime(std::uint32_t p, const Rational& coef = 1);
  /// Builds from an arbitrary term map, normalizing it.
  static MultiquadraticNumber from_terms(const Terms& terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// Coefficient of the monomial sqrt(prod r); zero when absent.
  Rational coefficient(const Radical& r) const;
  Rational rational_part() const { return coefficient({}); }
  /// Sorted union of all primes in the support.
  std::vector<std::uint32_t> generators() const;

  MultiquadraticNumber operator-() const;
  friend MultiquadraticNumber operator+(const MultiquadraticNumber& a, const MultiquadraticNumber& b);
  friend MultiquadraticNumber operator-(const MultiquadraticNumber& a, const MultiquadraticNumber& b);
  friend MultiquadraticNumber operator*(const MultiquadraticNumber& a, const MultiquadraticNumber& b);
  /// Throws std::domain_error on division by zero.
  friend MultiquadraticNumber operator/(const MultiquadraticNumber& a, const MultiquadraticNumber& b);
  MultiquadraticNumber& operator+=(const MultiquadraticNumber& b) { return *this = *this + b; }
  MultiquadraticNumber& operator-=(const MultiquadraticNumber& b) { return *this = *this - b; }
  MultiquadraticNumber& operator*=(const MultiquadraticNumber& b) { return *this = *this * b; }
  friend bool operator==(const MultiquadraticNumber& a, const MultiquadraticNumber& b) = default;

  /// Multiplicative inverse, by repeated multiplication with Galois conjugates.
  /// Throws std::domain_error for zero.
  MultiquadraticNumber inverse() const;

  /// Exact sign. Interval enclosures at doubling precision until zero is excluded.
  Sign sign() const;

  /// Rational lower/upper bounds on the real value, each monomial enclosed to within 2^-bits.
  std::pair<Rational, Rational> enclosure(unsigned bits) const;

  /// Human-readable form such as "1/16*sqrt(2) - 3".
  std::string to_string() const;

 private:
  Terms terms_;
};

inline bool is_zero(const MultiquadraticNumber& a) { return a.is_zero(); }

/// Product of two radicals: returns (prod of shared primes, symmetric difference).
std::pair<Integer, Radical> multiply_radicals(const Radical& a, const Radical& b);

bool is_prime(std::uint32_t n);

}  // namespace k3lat
