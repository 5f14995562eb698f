#pragma once

#include "k3lat/multiquadratic.hpp"
#include "k3lat/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace k3lat {

/// Univariate polynomial in the family parameter s. Coefficients are stored by
/// degree with trailing zeros trimmed, so the leading coefficient is nonzero.
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Coeff& constant) : coeffs_{constant} { trim(); }  // NOLINT
  Polynomial(long constant) : Polynomial(Coeff(constant)) {}         // NOLINT
  Polynomial(std::initializer_list<Coeff> by_degree) : coeffs_(by_degree) { trim(); }
  explicit Polynomial(std::vector<Coeff> by_degree) : coeffs_(std::move(by_degree)) { trim(); }

  /// The indeterminate s.
  static Polynomial variable() { return Polynomial(std::vector<Coeff>{Coeff(0), Coeff(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
  const std::vector<Coeff>& coefficients() const { return coeffs_; }
  Coeff coefficient(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : Coeff(0); }
  Coeff constant_term() const { return coefficient(0); }

  Coeff evaluate(const Rational& s) const {
    Coeff acc(0);
    const Coeff x(s);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// p(s + shift).
  Polynomial shifted(const Rational& shift) const {
    const Polynomial step{Coeff(shift), Coeff(1)};
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * step + Polynomial(*it);
    return acc;
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Coeff> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = out[i] + a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] = out[i] + b.coeffs_[i];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
  }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Applies f to every coefficient.
  template <class F>
  auto map(F f) const {
    using Out = decltype(f(std::declval<const Coeff&>()));
    std::vector<Out> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return Polynomial<Out>(std::move(out));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && k3lat::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using ScalarPolynomial = Polynomial<MultiquadraticNumber>;
using RationalPolynomial = Polynomial<Rational>;

template <class Coeff>
bool is_zero(const Polynomial<Coeff>& p) {
  return p.is_zero();
}

inline std::string coefficient_text(const Rational& q) { return format_rational(q); }
inline std::string coefficient_text(const MultiquadraticNumber& q) { return q.to_string(); }

/// "(a) + (b)*s + (c)*s^2"-style rendering, with parentheses only where needed.
template <class Coeff>
std::string to_string(const Polynomial<Coeff>& p, const std::string& var = "s") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < p.coefficients().size(); ++d) {
    const Coeff& c = p.coefficients()[d];
    if (is_zero(c)) continue;
    std::string text = coefficient_text(c);
    const bool simple = text.find(' ') == std::string::npos;
    const bool negative = simple && text.front() == '-';
    if (negative && !first) text.erase(0, 1);
    if (!first) os << (negative ? " - " : " + ");
    first = false;
    if (d == 0) {
      os << text;
      continue;
    }
    if (text == "-1") {
      os << "-";
    } else if (text != "1") {
      os << (simple ? text : "(" + text + ")") << "*";
    }
    os << var;
    if (d > 1) os << "^" << d;
  }
  return os.str();
}

}  // namespace k3lat
