#include "k3lat/integer_linalg.hpp"

#include "k3lat/errors.hpp"

#include <utility>

namespace k3lat {

namespace {

void swap_columns(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void negate_column(IntMatrix& m, std::size_t a) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) = -m(i, a);
}

// (col_p, col_j) <- (x*col_p + y*col_j, c*col_p + d*col_j)
void combine_columns_2x2(IntMatrix& m, std::size_t p, std::size_t j, const Integer& x, const Integer& y,
                         const Integer& c, const Integer& d) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Integer mp = m(i, p);
    const Integer mj = m(i, j);
    m(i, p) = x * mp + y * mj;
    m(i, j) = c * mp + d * mj;
  }
}

}  // namespace

std::optional<IntVector> primitive_integer_row(const std::vector<Rational>& row) {
  const Integer den = common_denominator(row);
  IntVector out(row.size());
  Integer content = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    const Rational scaled = row[i] * den;
    out[i] = scaled.get_num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
  }
  if (content == 0) return std::nullopt;
  for (const auto& x : out.coords)
    if (x != 0) {
      if (x < 0) content = -content;
      break;
    }
  for (auto& x : out.coords) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
  return out;
}

ColumnEchelon column_echelon(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  ColumnEchelon out{a, IntMatrix::identity(n), 0, {}};
  IntMatrix& b = out.reduced;
  IntMatrix& u = out.transform;
  std::size_t p = 0;
  for (std::size_t r = 0; r < m && p < n; ++r) {
    for (std::size_t j = p + 1; j < n; ++j) {
      if (b(r, j) == 0) continue;
      if (b(r, p) == 0) {
        swap_columns(b, p, j);
        swap_columns(u, p, j);
        continue;
      }
      Integer g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), b(r, p).get_mpz_t(), b(r, j).get_mpz_t());
      const Integer c = -b(r, j) / g;
      const Integer d = b(r, p) / g;
      combine_columns_2x2(b, p, j, x, y, c, d);
      combine_columns_2x2(u, p, j, x, y, c, d);
    }
    if (b(r, p) != 0) {
      if (b(r, p) < 0) {
        negate_column(b, p);
        negate_column(u, p);
      }
      out.pivot_rows.push_back(r);
      ++p;
    }
  }
  out.rank = p;
  return out;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const ColumnEchelon e = column_echelon(a);
  return e.transform.column_block(e.rank, a.cols() - e.rank);
}

std::optional<IntVector> solve_integer_system(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length differs from row count");
  const ColumnEchelon e = column_echelon(a);
  IntVector residual = b;
  IntVector y(a.cols());
  std::size_t next_pivot = 0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (next_pivot < e.rank && e.pivot_rows[next_pivot] == r) {
      const Integer& pivot = e.reduced(r, next_pivot);
      if (!mpz_divisible_p(residual[r].get_mpz_t(), pivot.get_mpz_t())) return std::nullopt;
      y[next_pivot] = residual[r] / pivot;
      for (std::size_t i = 0; i < a.rows(); ++i) residual[i] -= y[next_pivot] * e.reduced(i, next_pivot);
      ++next_pivot;
    } else if (residual[r] != 0) {
      return std::nullopt;
    }
  }
  return combine_columns(e.transform, y);
}

namespace {

struct GramSchmidt {
  std::vector<std::vector<Rational>> mu;
  std::vector<Rational> norms;
};

GramSchmidt gram_schmidt(const IntMatrix& g) {
  const std::size_t n = g.rows();
  GramSchmidt gs{std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)), std::vector<Rational>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rational acc = g(i, j);
      for (std::size_t k = 0; k < j; ++k) acc -= gs.mu[j][k] * gs.mu[i][k] * gs.norms[k];
      gs.mu[i][j] = acc / gs.norms[j];
    }
    Rational acc = g(i, i);
    for (std::size_t k = 0; k < i; ++k) acc -= gs.mu[i][k] * gs.mu[i][k] * gs.norms[k];
    gs.norms[i] = acc;
  }
  return gs;
}

Integer round_rational(const Rational& q) { return floor_of(q + Rational(1, 2)); }

}  // namespace

LllResult lll_reduce(const IntMatrix& gram) {
  const std::size_t n = gram.rows();
  if (!certify_positive_definite(gram)) throw IndefiniteRestriction("LLL requires a positive definite Gram matrix");
  IntMatrix t = IntMatrix::identity(n);
  IntMatrix g = gram;
  const Rational delta(3, 4);
  auto refresh = [&] { g = t.transpose() * gram * t; };
  std::size_t k = 1;
  while (k < n) {
    GramSchmidt gs = gram_schmidt(g);
    for (std::size_t j = k; j-- > 0;) {
      const Integer q = round_rational(gs.mu[k][j]);
      if (q == 0) continue;
      for (std::size_t i = 0; i < n; ++i) t(i, k) -= q * t(i, j);
      refresh();
      gs = gram_schmidt(g);
    }
    const Rational& m = gs.mu[k][k - 1];
    if (gs.norms[k] < (delta - m * m) * gs.norms[k - 1]) {
      swap_columns(t, k, k - 1);
      refresh();
      k = k > 1 ? k - 1 : 1;
    } else {
      ++k;
    }
  }
  refresh();
  return {t, g};
}

}  // namespace k3lat
