#include "k3lat/affine_family.hpp"
#include "k3lat/errors.hpp"
#include "k3lat/lattice.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace k3lat;

namespace {

// Bourbaki labeling: chain 1-3-4-5-6-7-8, node 2 attached to node 4; off-diagonal -1 on edges.
const IntMatrix kMinusE8{
    {-2, 0, -1, 0, 0, 0, 0, 0},  //
    {0, -2, 0, -1, 0, 0, 0, 0},  //
    {-1, 0, -2, -1, 0, 0, 0, 0},  //
    {0, -1, -1, -2, -1, 0, 0, 0},  //
    {0, 0, 0, -1, -2, -1, 0, 0},  //
    {0, 0, 0, 0, -1, -2, -1, 0},  //
    {0, 0, 0, 0, 0, -1, -2, -1},  //
    {0, 0, 0, 0, 0, 0, -1, -2},
};

IntVector random_vector(std::mt19937_64& rng, std::size_t n, long range) {
  std::uniform_int_distribution<long> d(-range, range);
  IntVector v(n);
  for (auto& x : v.coords) x = d(rng);
  return v;
}

}  // namespace

TEST(Hyperbolic, Pairings) {
  const GramLattice h = hyperbolic_plane();
  const IntVector u = h.basis_vector("u");
  const IntVector v = h.basis_vector("v");
  EXPECT_EQ(inner(u, v, h), 1);
  EXPECT_EQ(inner(u, u, h), 0);
  EXPECT_EQ(inner(u + v, u + v, h), 2);
  EXPECT_EQ(signature(h), std::make_pair(std::size_t{1}, std::size_t{1}));
}

TEST(MinusE8, MatchesGroundTruth) {
  EXPECT_EQ(minus_e8_gram(), kMinusE8);
  const GramLattice e8 = minus_e8();
  EXPECT_EQ(determinant(e8), 1);
  EXPECT_EQ(oracle::determinant(oracle::to_dense(kMinusE8)), 1);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(e8.gram()(i, i), -2);
  EXPECT_EQ(signature(e8), std::make_pair(std::size_t{0}, std::size_t{8}));
  EXPECT_TRUE(oracle::positive_definite(oracle::to_dense(-kMinusE8)));
}

TEST(K3Lattice, Invariants) {
  const GramLattice& l = k3_lattice();
  EXPECT_EQ(l.rank(), 22u);
  EXPECT_EQ(l.rank(), kK3Rank);
  EXPECT_TRUE(is_even(l));
  EXPECT_TRUE(is_unimodular(l));
  EXPECT_EQ(abs(determinant(l)), 1);
  EXPECT_EQ(signature(l), std::make_pair(std::size_t{3}, std::size_t{19}));
  EXPECT_EQ(oracle::eigen_signature(l.gram()), std::make_pair(3, 19));
}

TEST(K3Lattice, BasisOrder) {
  const GramLattice& l = k3_lattice();
  const std::vector<std::string> head{"u", "v", "x", "y", "z", "t"};
  for (std::size_t i = 0; i < head.size(); ++i) EXPECT_EQ(l.label(i), head[i]);
  EXPECT_EQ(l.label(kFirstE8Offset), "e8a1");
  EXPECT_EQ(l.label(kSecondE8Offset + 7), "e8b8");
  EXPECT_EQ(l.index_of("e8b1"), kSecondE8Offset);
  EXPECT_THROW(l.index_of("w"), std::out_of_range);
}

TEST(K3Lattice, FamilyPairings) {
  const GramLattice& l = k3_lattice();
  const ScalarPolynomial s = ScalarPolynomial::variable();
  const ScalarVector kappa = l.combination({{"u", 2}, {"v", 1}, {"y", s}});
  const ScalarVector w1 = l.combination({{"x", 1}, {"u", -s}, {"y", 2}});
  EXPECT_EQ(inner(kappa, kappa, l), ScalarPolynomial(4));
  EXPECT_TRUE(inner(kappa, w1, l).is_zero());
}

TEST(K3Lattice, IrrationalVectorNormNegative) {
  const GramLattice& l = k3_lattice();
  ScalarVector e(l.rank());
  const auto ep = irrational_vector(Rational(1, 16));
  for (std::size_t i = 0; i < 8; ++i) e[kFirstE8Offset + i] = ScalarPolynomial(ep[i]);
  const ScalarPolynomial n = inner(e, e, l);
  ASSERT_TRUE(n.is_constant());
  EXPECT_EQ(n.constant_term().sign(), Sign::negative);
  EXPECT_LT(oracle::evaluate(n.constant_term()), 0);
}

TEST(K3Lattice, InnerDimensionMismatch) {
  EXPECT_THROW(inner(IntVector(3), IntVector(22), k3_lattice()), DimensionMismatch);
  EXPECT_THROW(inner(ScalarVector(21), ScalarVector(22), k3_lattice()), DimensionMismatch);
}

TEST(K3Lattice, SymmetricBilinear) {
  const GramLattice& l = k3_lattice();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const IntVector x = random_vector(rng, 22, 9);
    const IntVector y = random_vector(rng, 22, 9);
    const IntVector z = random_vector(rng, 22, 9);
    EXPECT_EQ(inner(x, y, l), inner(y, x, l));
    IntVector ax_by(22);
    for (std::size_t k = 0; k < 22; ++k) ax_by[k] = 3 * x[k] - 5 * y[k];
    EXPECT_EQ(inner(ax_by, z, l), 3 * inner(x, z, l) - 5 * inner(y, z, l));
  }
}

TEST(K3Lattice, EvenOnRandomVectors) {
  const GramLattice& l = k3_lattice();
  std::mt19937_64 rng(6);
  for (int i = 0; i < 500; ++i) {
    const IntVector x = random_vector(rng, 22, 50);
    EXPECT_TRUE(mpz_even_p(inner(x, x, l).get_mpz_t()));
  }
}

TEST(K3Lattice, BlocksAreOrthogonal) {
  const GramLattice& l = k3_lattice();
  std::mt19937_64 rng(8);
  const std::size_t starts[] = {0, 2, 4, kFirstE8Offset, kSecondE8Offset};
  const std::size_t sizes[] = {2, 2, 2, 8, 8};
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b < 5; ++b) {
      if (a == b) continue;
      IntVector x(22), y(22);
      for (std::size_t k = 0; k < sizes[a]; ++k) x[starts[a] + k] = static_cast<long>(rng() % 7) - 3;
      for (std::size_t k = 0; k < sizes[b]; ++k) y[starts[b] + k] = static_cast<long>(rng() % 7) - 3;
      EXPECT_EQ(inner(x, y, l), 0);
    }
}

TEST(GramLattice, RejectsAsymmetric) {
  EXPECT_THROW(GramLattice(IntMatrix{{0, 1}, {2, 0}}), std::invalid_argument);
  EXPECT_THROW(GramLattice(IntMatrix{{0, 1}, {1, 0}}, {"only"}), std::invalid_argument);
}

TEST(GramLattice, SignatureRejectsDegenerate) {
  EXPECT_THROW(signature(GramLattice(IntMatrix{{0, 0}, {0, -2}})), DegenerateForm);
}

TEST(GramLattice, SignatureAgreesWithEigenOracle) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> d(-4, 4);
  int checked = 0;
  while (checked < 100) {
    const std::size_t n = 1 + rng() % 5;
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = d(rng);
    if (determinant(g) == 0) continue;
    const auto [p, q] = signature(GramLattice(g));
    const auto [ep, eq] = oracle::eigen_signature(g);
    EXPECT_EQ(static_cast<int>(p), ep);
    EXPECT_EQ(static_cast<int>(q), eq);
    ++checked;
  }
}

TEST(GramLattice, DeterminantAgreesWithLaplace) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng() % 6;
    IntMatrix g(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) g(r, c) = d(rng);
    EXPECT_EQ(determinant(g), oracle::determinant(oracle::to_dense(g)));
  }
}

TEST(GramLattice, DirectSumIsBlockDiagonal) {
  const GramLattice sum = direct_sum({hyperbolic_plane("a", "b"), minus_e8("q")});
  EXPECT_EQ(sum.rank(), 10u);
  EXPECT_EQ(sum.gram()(0, 1), 1);
  EXPECT_EQ(sum.gram()(1, 2), 0);
  EXPECT_EQ(sum.label(2), "q1");
}
