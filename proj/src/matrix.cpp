#include "k3lat/matrix.hpp"

#include <utility>

namespace k3lat {

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
        a(i, j) = t;
      }
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<Integer> leading_principal_minors(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("minors of a non-square matrix");
  std::vector<Integer> out;
  out.reserve(m.rows());
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    IntMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(i, j);
    out.push_back(determinant(sub));
  }
  return out;
}

std::optional<std::vector<Integer>> certify_positive_definite(const IntMatrix& m) {
  if (!m.is_symmetric()) return std::nullopt;
  auto minors = leading_principal_minors(m);
  for (const auto& d : minors)
    if (sgn(d) <= 0) return std::nullopt;
  return minors;
}

Inertia inertia(const RationalMatrix& symmetric) {
  if (!symmetric.is_symmetric()) throw std::invalid_argument("inertia of a non-symmetric matrix");
  RationalMatrix a = symmetric;
  std::size_t n = a.rows();
  std::vector<std::size_t> live(n);
  for (std::size_t i = 0; i < n; ++i) live[i] = i;
  Inertia out;

  auto eliminate_single = [&](std::size_t p) {
    const Rational pivot = a(p, p);
    (sgn(pivot) > 0 ? out.positive : out.negative)++;
    std::erase(live, p);
    for (std::size_t i : live) {
      if (is_zero(a(i, p))) continue;
      const Rational f = a(i, p) / pivot;
      for (std::size_t j : live) a(i, j) -= f * a(p, j);
    }
  };

  while (!live.empty()) {
    std::size_t diag = n;
    for (std::size_t i : live)
      if (!is_zero(a(i, i))) {
        diag = i;
        break;
      }
    if (diag != n) {
      eliminate_single(diag);
      continue;
    }
    // Every remaining diagonal entry vanishes: look for a hyperbolic 2x2 block [[0,b],[b,0]].
    std::size_t p = n;
    std::size_t q = n;
    for (std::size_t i : live) {
      for (std::size_t j : live)
        if (j != i && !is_zero(a(i, j))) {
          p = i;
          q = j;
          break;
        }
      if (p != n) break;
    }
    if (p == n) {
      out.zero += live.size();
      break;
    }
    out.positive++;
    out.negative++;
    const Rational b = a(p, q);
    std::erase(live, p);
    std::erase(live, q);
    // Schur complement with inverse [[0, 1/b], [1/b, 0]].
    std::vector<std::pair<Rational, Rational>> coupling;
    for (std::size_t i : live) coupling.emplace_back(a(i, p), a(i, q));
    for (std::size_t ii = 0; ii < live.size(); ++ii)
      for (std::size_t jj = 0; jj < live.size(); ++jj) {
        const auto& [ip, iq] = coupling[ii];
        const auto& [jp, jq] = coupling[jj];
        a(live[ii], live[jj]) -= (ip * jq + iq * jp) / b;
      }
  }
  return out;
}

}  // namespace k3lat
