#include "k3lat/multiquadratic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace k3lat {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Integer radicand(const Radical& r) {
  Integer n = 1;
  for (const auto p : r) n *= p;
  return n;
}

std::pair<Integer, Radical> multiply_radicals(const Radical& a, const Radical& b) {
  Integer square_part = 1;
  Radical rest;
  rest.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && *i < *j)) {
      rest.push_back(*i++);
    } else if (i == a.end() || *j < *i) {
      rest.push_back(*j++);
    } else {
      square_part *= *i;
      ++i;
      ++j;
    }
  }
  return {square_part, rest};
}

MultiquadraticNumber::MultiquadraticNumber(const Rational& q) {
  if (sgn(q) != 0) terms_.emplace(Radical{}, q);
}

MultiquadraticNumber::MultiquadraticNumber(long q) : MultiquadraticNumber(Rational(q)) {}

MultiquadraticNumber MultiquadraticNumber::radical(Radical primes, const Rational& coef) {
  std::sort(primes.begin(), primes.end());
  if (std::adjacent_find(primes.begin(), primes.end()) != primes.end())
    throw std::invalid_argument("radical primes must be distinct");
  for (const auto p : primes)
    if (!is_prime(p)) throw std::invalid_argument("radical generator " + std::to_string(p) + " is not prime");
  MultiquadraticNumber out;
  if (sgn(coef) != 0) out.terms_.emplace(std::move(primes), coef);
  return out;
}

MultiquadraticNumber MultiquadraticNumber::sqrt_prime(std::uint32_t p, const Rational& coef) {
  return radical({p}, coef);
}

MultiquadraticNumber MultiquadraticNumber::from_terms(const Terms& terms) {
  MultiquadraticNumber out;
  for (const auto& [r, q] : terms) out += radical(r, q);
  return out;
}

bool MultiquadraticNumber::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational MultiquadraticNumber::coefficient(const Radical& r) const {
  const auto it = terms_.find(r);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::uint32_t> MultiquadraticNumber::generators() const {
  std::vector<std::uint32_t> out;
  for (const auto& [r, q] : terms_) out.insert(out.end(), r.begin(), r.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MultiquadraticNumber MultiquadraticNumber::operator-() const {
  MultiquadraticNumber out = *this;
  for (auto& [r, q] : out.terms_) q = -q;
  return out;
}

MultiquadraticNumber operator+(const MultiquadraticNumber& a, const MultiquadraticNumber& b) {
  MultiquadraticNumber out = a;
  for (const auto& [r, q] : b.terms_) {
    auto [it, inserted] = out.terms_.try_emplace(r, q);
    if (!inserted) {
      it->second += q;
      if (sgn(it->second) == 0) out.terms_.erase(it);
    }
  }
  return out;
}

MultiquadraticNumber operator-(const MultiquadraticNumber& a, const MultiquadraticNumber& b) { return a + (-b); }

MultiquadraticNumber operator*(const MultiquadraticNumber& a, const MultiquadraticNumber& b) {
  MultiquadraticNumber out;
  for (const auto& [ra, qa] : a.terms_) {
    for (const auto& [rb, qb] : b.terms_) {
      auto [square, rest] = multiply_radicals(ra, rb);
      Rational c = qa * qb * square;
      auto [it, inserted] = out.terms_.try_emplace(std::move(rest), c);
      if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

MultiquadraticNumber MultiquadraticNumber::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (is_rational()) return MultiquadraticNumber(Rational(1) / rational_part());
  // Split off the largest prime p: a = a0 + a1*sqrt(p), then
  // 1/a = (a0 - a1*sqrt(p)) / (a0^2 - p*a1^2), and the denominator no longer involves p.
  const std::uint32_t p = generators().back();
  MultiquadraticNumber a0;
  MultiquadraticNumber a1;
  for (const auto& [r, q] : terms_) {
    if (std::binary_search(r.begin(), r.end(), p)) {
      Radical without;
      std::copy_if(r.begin(), r.end(), std::back_inserter(without), [p](auto x) { return x != p; });
      a1.terms_.emplace(std::move(without), q);
    } else {
      a0.terms_.emplace(r, q);
    }
  }
  const MultiquadraticNumber conjugate = a0 - a1 * sqrt_prime(p);
  const MultiquadraticNumber norm = a0 * a0 - a1 * a1 * MultiquadraticNumber(Rational(p));
  return conjugate * norm.inverse();
}

MultiquadraticNumber operator/(const MultiquadraticNumber& a, const MultiquadraticNumber& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (b.is_rational()) {
    MultiquadraticNumber out = a;
    for (auto& [r, q] : out.terms_) q /= b.rational_part();
    return out;
  }
  return a * b.inverse();
}

std::pair<Rational, Rational> MultiquadraticNumber::enclosure(unsigned bits) const {
  Rational lo = 0;
  Rational hi = 0;
  Integer scale = 1;
  scale <<= bits;
  for (const auto& [r, q] : terms_) {
    if (r.empty()) {
      lo += q;
      hi += q;
      continue;
    }
    // floor(sqrt(n * 4^bits)) / 2^bits <= sqrt(n) < (floor + 1) / 2^bits
    Integer scaled = radicand(r) * scale * scale;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    const Rational root_lo(root, scale);
    const Rational root_hi(root + 1, scale);
    if (sgn(q) > 0) {
      lo += q * root_lo;
      hi += q * root_hi;
    } else {
      lo += q * root_hi;
      hi += q * root_lo;
    }
  }
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

Sign MultiquadraticNumber::sign() const {
  if (is_zero()) return Sign::zero;
  if (is_rational()) return sgn(rational_part()) > 0 ? Sign::positive : Sign::negative;
  // A nonzero value lies at positive distance from 0, so the loop terminates.
  for (unsigned bits = 16;; bits *= 2) {
    const auto [lo, hi] = enclosure(bits);
    if (sgn(lo) > 0) return Sign::positive;
    if (sgn(hi) < 0) return Sign::negative;
  }
}

std::string MultiquadraticNumber::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [r, q] : terms_) {
    Rational c = q;
    if (!first) {
      os << (sgn(c) < 0 ? " - " : " + ");
      c = abs(c);
    }
    first = false;
    if (r.empty()) {
      os << format_rational(c);
      continue;
    }
    if (c == -1) os << "-";
    else if (c != 1) os << format_rational(c) << "*";
    os << "sqrt(" << radicand(r).get_str() << ")";
  }
  return os.str();
}

}  // namespace k3lat
