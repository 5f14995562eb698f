#pragma once

#include "k3lat/matrix.hpp"
#include "k3lat/polynomial.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace k3lat {

/// Integer coordinate vector of a lattice element.
struct IntVector {
  std::vector<Integer> coords;

  IntVector() = default;
  explicit IntVector(std::size_t n) : coords(n, Integer(0)) {}
  explicit IntVector(std::vector<Integer> c) : coords(std::move(c)) {}
  IntVector(std::initializer_list<long> c) : coords(c.begin(), c.end()) {}

  std::size_t size() const { return coords.size(); }
  Integer& operator[](std::size_t i) { return coords[i]; }
  const Integer& operator[](std::size_t i) const { return coords[i]; }
  bool is_zero() const;
  friend bool operator==(const IntVector&, const IntVector&) = default;
  friend IntVector operator-(const IntVector& a);
  friend IntVector operator+(const IntVector& a, const IntVector& b);
};

/// Vector of L tensor R whose coordinates may depend polynomially on the family parameter s.
struct ScalarVector {
  std::vector<ScalarPolynomial> coords;

  ScalarVector() = default;
  explicit ScalarVector(std::size_t n) : coords(n) {}
  explicit ScalarVector(std::vector<ScalarPolynomial> c) : coords(std::move(c)) {}

  std::size_t size() const { return coords.size(); }
  ScalarPolynomial& operator[](std::size_t i) { return coords[i]; }
  const ScalarPolynomial& operator[](std::size_t i) const { return coords[i]; }
  /// Highest s-degree over all coordinates (-1 for the zero vector).
  std::ptrdiff_t degree() const;
  bool is_constant() const { return degree() <= 0; }
  ScalarVector evaluate(const Rational& s) const;
  ScalarVector shifted(const Rational& shift) const;
  /// Coefficient vector of s^d.
  std::vector<MultiquadraticNumber> coefficient(std::size_t d) const;
  friend bool operator==(const ScalarVector&, const ScalarVector&) = default;
  friend ScalarVector operator+(const ScalarVector& a, const ScalarVector& b);
  friend ScalarVector operator-(const ScalarVector& a, const ScalarVector& b);
  friend ScalarVector operator*(const ScalarPolynomial& c, const ScalarVector& v);
};

ScalarVector to_scalar(const IntVector& v);

/// Integer lattice given by a symmetric Gram matrix in a fixed basis.
class GramLattice {
 public:
  /// Throws std::invalid_argument if gram is not square and symmetric or the labels do not match.
  explicit GramLattice(IntMatrix gram, std::vector<std::string> labels = {});

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Label of basis vector i, or "b<i>" when unlabeled.
  std::string label(std::size_t i) const;
  /// Throws std::out_of_range for an unknown label.
  std::size_t index_of(const std::string& label) const;

  /// Basis vector by label, as an integer vector.
  IntVector basis_vector(const std::string& label) const;
  /// Linear combination of labeled basis vectors with polynomial coefficients.
  ScalarVector combination(std::initializer_list<std::pair<std::string, ScalarPolynomial>> terms) const;

  friend bool operator==(const GramLattice& a, const GramLattice& b) { return a.gram_ == b.gram_; }

 private:
  IntMatrix gram_;
  std::vector<std::string> labels_;
};

/// H, Gram [[0,1],[1,0]] in the basis (u, v).
GramLattice hyperbolic_plane(const std::string& first = "u", const std::string& second = "v");

/// The negative definite E8 lattice. Bourbaki node numbering: the chain
/// 1-3-4-5-6-7-8 with node 2 attached to node 4.
GramLattice minus_e8(const std::string& prefix = "e8_");

/// The explicit -E8 Gram matrix.
const IntMatrix& minus_e8_gram();

/// Orthogonal direct sum; labels are concatenated.
GramLattice direct_sum(const std::vector<GramLattice>& parts);

/// L = 3H + 2(-E8), basis (u, v, x, y, z, t, e8a1..e8a8, e8b1..e8b8).
const GramLattice& k3_lattice();

/// First coordinate of the first and second -E8 blocks of the K3 lattice.
inline constexpr std::size_t kFirstE8Offset = 6;
inline constexpr std::size_t kSecondE8Offset = 14;
inline constexpr std::size_t kK3Rank = 22;

Integer inner(const IntVector& x, const IntVector& y, const GramLattice& lat);
/// x^T G y as a polynomial in s. Throws DimensionMismatch.
ScalarPolynomial inner(const ScalarVector& x, const ScalarVector& y, const GramLattice& lat);

/// G * x, coordinatewise.
ScalarVector gram_times(const GramLattice& lat, const ScalarVector& x);

Integer determinant(const GramLattice& lat);
bool is_even(const GramLattice& lat);
bool is_unimodular(const GramLattice& lat);

/// (positive, negative) directions. Throws DegenerateForm if the form is degenerate.
std::pair<std::size_t, std::size_t> signature(const GramLattice& lat);

/// Gram matrix B^T G B of the sublattice spanned by the columns of basis.
IntMatrix restricted_gram(const IntMatrix& basis, const GramLattice& lat);

/// basis * coeffs.
IntVector combine_columns(const IntMatrix& basis, const IntVector& coeffs);

}  // namespace k3lat
