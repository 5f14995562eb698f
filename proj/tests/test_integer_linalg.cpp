#include "k3lat/integer_linalg.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace k3lat;

namespace {

IntVector times(const IntMatrix& a, const IntVector& x) {
  IntVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  return out;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long range) {
  std::uniform_int_distribution<long> d(-range, range);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST(ColumnEchelon, TransformIsUnimodular) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const IntMatrix a = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 6, 9);
    const ColumnEchelon ce = column_echelon(a);
    EXPECT_EQ(a * ce.transform, ce.reduced);
    EXPECT_EQ(abs(oracle::determinant(oracle::to_dense(ce.transform))), 1);
    for (std::size_t c = ce.rank; c < a.cols(); ++c)
      for (std::size_t r = 0; r < a.rows(); ++r) EXPECT_EQ(ce.reduced(r, c), 0);
  }
}

TEST(IntegerKernel, EmptyAndSingleForm) {
  EXPECT_EQ(integer_kernel(IntMatrix(0, 22)).cols(), 22u);
  IntMatrix pin_v(1, 22);
  pin_v(0, 1) = 1;
  EXPECT_EQ(integer_kernel(pin_v).cols(), 21u);
}

TEST(IntegerKernel, IsSaturated) {
  // 2x + 4y = 0 has kernel generated by (2, -1), not (4, -2).
  const IntMatrix k = integer_kernel(IntMatrix{{2, 4}});
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_EQ(abs(k(0, 0)), 2);
  EXPECT_EQ(abs(k(1, 0)), 1);
}

TEST(IntegerKernel, RandomSystemsAnnihilate) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    const std::size_t rows = 1 + rng() % 3;
    const std::size_t cols = rows + 1 + rng() % 4;
    const IntMatrix a = random_matrix(rng, rows, cols, 6);
    const IntMatrix k = integer_kernel(a);
    const IntMatrix prod = a * k;
    for (std::size_t r = 0; r < prod.rows(); ++r)
      for (std::size_t c = 0; c < prod.cols(); ++c) EXPECT_EQ(prod(r, c), 0);
    EXPECT_GE(k.cols(), cols - rows);
  }
}

TEST(SolveIntegerSystem, SolvableAndNot) {
  const IntMatrix a{{2, 4}, {0, 3}};
  const auto x = solve_integer_system(a, IntVector{6, 3});
  ASSERT_TRUE(x);
  EXPECT_EQ(times(a, *x), (IntVector{6, 3}));
  EXPECT_FALSE(solve_integer_system(IntMatrix{{2, 4}}, IntVector{3}));
  EXPECT_FALSE(solve_integer_system(IntMatrix{{1, 0}, {1, 0}}, IntVector{1, 2}));
}

TEST(SolveIntegerSystem, RandomRightHandSides) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const IntMatrix a = random_matrix(rng, 2 + rng() % 2, 4, 7);
    IntVector x0(4);
    for (auto& c : x0.coords) c = static_cast<long>(rng() % 11) - 5;
    const IntVector b = times(a, x0);
    const auto x = solve_integer_system(a, b);
    ASSERT_TRUE(x);
    EXPECT_EQ(times(a, *x), b);
  }
}

TEST(PrimitiveRow, ScalesToCoprimeIntegers) {
  const auto row = primitive_integer_row({Rational(-1, 8), Rational(0), Rational(-1, 16)});
  ASSERT_TRUE(row);
  EXPECT_EQ(*row, (IntVector{2, 0, 1}));
  EXPECT_FALSE(primitive_integer_row({Rational(0), Rational(0)}));
}

TEST(Lll, PreservesLatticeAndReduces) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 30; ++i) {
    const IntMatrix g = -oracle::random_negative_definite(rng, 2 + rng() % 3);
    const LllResult r = lll_reduce(g);
    EXPECT_EQ(r.transform.transpose() * g * r.transform, r.reduced);
    EXPECT_EQ(abs(oracle::determinant(oracle::to_dense(r.transform))), 1);
    // Size reduction and the Lovasz condition, checked on a Gram-Schmidt recomputed here.
    const std::size_t n = g.rows();
    std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
    std::vector<Rational> b(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t c = 0; c < a; ++c) {
        Rational acc = r.reduced(a, c);
        for (std::size_t k = 0; k < c; ++k) acc -= mu[a][k] * mu[c][k] * b[k];
        mu[a][c] = acc / b[c];
        EXPECT_LE(abs(mu[a][c]), Rational(1, 2));
      }
      Rational acc = r.reduced(a, a);
      for (std::size_t k = 0; k < a; ++k) acc -= mu[a][k] * mu[a][k] * b[k];
      b[a] = acc;
      if (a > 0) EXPECT_GE(b[a], (Rational(3, 4) - mu[a][a - 1] * mu[a][a - 1]) * b[a - 1]);
    }
  }
}

TEST(Lll, RejectsIndefinite) { EXPECT_THROW(lll_reduce(IntMatrix{{0, 1}, {1, 0}}), std::domain_error); }
