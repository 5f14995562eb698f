#pragma once

// Reference implementations used only by tests. None of them calls into the
// library's enumeration, elimination or sign code.

#include "k3lat/lattice.hpp"
#include "k3lat/multiquadratic.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using k3lat::Integer;
using k3lat::IntMatrix;
using k3lat::IntVector;
using k3lat::Rational;
using Dense = std::vector<std::vector<std::int64_t>>;
using Decimal = boost::multiprecision::cpp_dec_float_100;

inline Dense to_dense(const IntMatrix& m) {
  Dense d(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m(i, j).get_si();
  return d;
}

// Laplace expansion along the first row; fine for rank <= 8.
inline Integer laplace(const Dense& m, std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
  if (rows.empty()) return 1;
  Integer acc = 0;
  const std::size_t r = rows.front();
  rows.erase(rows.begin());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (m[r][cols[k]] == 0) continue;
    auto rest = cols;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    const Integer term = Integer(static_cast<long>(m[r][cols[k]])) * laplace(m, rows, rest);
    acc += (k % 2 == 0) ? term : Integer(-term);
  }
  return acc;
}

inline std::vector<std::size_t> iota(std::size_t n, std::size_t skip = SIZE_MAX) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (i != skip) out.push_back(i);
  return out;
}

inline Integer determinant(const Dense& m) { return laplace(m, iota(m.size()), iota(m.size())); }

/// All leading principal minors positive.
inline bool positive_definite(const Dense& m) {
  for (std::size_t k = 1; k <= m.size(); ++k)
    if (laplace(m, iota(k), iota(k)) <= 0) return false;
  return true;
}

/// Every x with x^T P x == value, by exhaustive search over the box
/// |x_i| <= sqrt(value * (P^-1)_ii), with (P^-1)_ii = cofactor_ii / det.
inline std::set<std::vector<std::int64_t>> box_search(const Dense& p, std::int64_t value) {
  const std::size_t n = p.size();
  const Integer det = determinant(p);
  std::vector<std::int64_t> bound(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Integer cof = laplace(p, iota(n, i), iota(n, i));
    Integer q = Integer(static_cast<long>(value)) * cof / det;
    bound[i] = Integer(sqrt(q)).get_si();
  }
  std::set<std::vector<std::int64_t>> found;
  std::vector<std::int64_t> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -bound[i];
  while (true) {
    std::int64_t norm = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) norm += x[i] * p[i][j] * x[j];
    if (norm == value) found.insert(x);
    std::size_t k = 0;
    while (k < n && x[k] == bound[k]) {
      x[k] = -bound[k];
      ++k;
    }
    if (k == n) break;
    ++x[k];
  }
  return found;
}

inline std::set<std::vector<std::int64_t>> as_set(const std::vector<IntVector>& vs) {
  std::set<std::vector<std::int64_t>> out;
  for (const auto& v : vs) {
    std::vector<std::int64_t> c;
    for (const auto& x : v.coords) c.push_back(x.get_si());
    out.insert(c);
  }
  return out;
}

/// (positive, negative) eigenvalue counts in double precision.
inline std::pair<int, int> eigen_signature(const IntMatrix& g) {
  Eigen::MatrixXd m(g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) m(i, j) = g(i, j).get_d();
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  int pos = 0, neg = 0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    if (es.eigenvalues()[i] > 1e-9) ++pos;
    if (es.eigenvalues()[i] < -1e-9) ++neg;
  }
  return {pos, neg};
}

inline Decimal decimal(const Rational& q) {
  return Decimal(q.get_num().get_str()) / Decimal(q.get_den().get_str());
}

/// Value of a multiquadratic number to 100 significant digits.
inline Decimal evaluate(const k3lat::MultiquadraticNumber& x) {
  Decimal acc = 0;
  for (const auto& [r, q] : x.terms()) acc += decimal(q) * sqrt(Decimal(k3lat::radicand(r).get_str()));
  return acc;
}

inline int decimal_sign(const Decimal& d) { return d > 0 ? 1 : (d < 0 ? -1 : 0); }

/// Random element with support among the first `prime_count` primes.
inline k3lat::MultiquadraticNumber random_multiquadratic(std::mt19937_64& rng, std::size_t prime_count = 4,
                                                         int max_terms = 4) {
  static const std::uint32_t primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 9);
  std::uniform_int_distribution<unsigned> mask(0, (1u << prime_count) - 1);
  k3lat::MultiquadraticNumber out;
  for (int t = terms(rng); t > 0; --t) {
    k3lat::Radical r;
    const unsigned m = mask(rng);
    for (std::size_t i = 0; i < prime_count; ++i)
      if (m & (1u << i)) r.push_back(primes[i]);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    out += k3lat::MultiquadraticNumber::radical(r, q);
  }
  return out;
}

/// Nonzero a + b*sqrt(p) with a within 10^-digits of -b*sqrt(p).
inline k3lat::MultiquadraticNumber near_cancellation(std::mt19937_64& rng, int digits) {
  static const std::uint32_t primes[] = {2, 3, 5, 7, 11, 13};
  std::uniform_int_distribution<int> pick(0, 5);
  std::uniform_int_distribution<long> coef(1, 50);
  const std::uint32_t p = primes[pick(rng)];
  const long b = coef(rng);
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // floor(b * sqrt(p) * 10^digits) via an integer square root.
  const Integer inside = Integer(b) * b * p * scale * scale;
  const Integer root = sqrt(inside);
  std::uniform_int_distribution<int> side(0, 1);
  const Integer a = side(rng) ? root : Integer(root + 1);
  return k3lat::MultiquadraticNumber(Rational(-a, scale)) + k3lat::MultiquadraticNumber::sqrt_prime(p, b);
}

/// Random symmetric negative definite Gram matrix, entries in [-6, 6].
inline IntMatrix random_negative_definite(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> off(-6, 6);
  std::uniform_int_distribution<long> diag(-6, -1);
  while (true) {
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      g(i, i) = diag(rng);
      for (std::size_t j = i + 1; j < n; ++j) g(i, j) = g(j, i) = off(rng);
    }
    if (positive_definite(to_dense(-g))) return g;
  }
}

}  // namespace oracle
