#include "k3lat/lattice.hpp"

#include "k3lat/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3lat {

bool IntVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Integer& x) { return x == 0; });
}

IntVector operator-(const IntVector& a) {
  IntVector out = a;
  for (auto& x : out.coords) x = -x;
  return out;
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum of different lengths");
  IntVector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

std::ptrdiff_t ScalarVector::degree() const {
  std::ptrdiff_t d = -1;
  for (const auto& c : coords) d = std::max(d, c.degree());
  return d;
}

ScalarVector ScalarVector::evaluate(const Rational& s) const {
  ScalarVector out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = ScalarPolynomial(coords[i].evaluate(s));
  return out;
}

ScalarVector ScalarVector::shifted(const Rational& shift) const {
  ScalarVector out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = coords[i].shifted(shift);
  return out;
}

std::vector<MultiquadraticNumber> ScalarVector::coefficient(std::size_t d) const {
  std::vector<MultiquadraticNumber> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = coords[i].coefficient(d);
  return out;
}

ScalarVector operator+(const ScalarVector& a, const ScalarVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum of different lengths");
  ScalarVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

ScalarVector operator-(const ScalarVector& a, const ScalarVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector difference of different lengths");
  ScalarVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

ScalarVector operator*(const ScalarPolynomial& c, const ScalarVector& v) {
  ScalarVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

ScalarVector to_scalar(const IntVector& v) {
  ScalarVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = ScalarPolynomial(MultiquadraticNumber(Rational(v[i])));
  return out;
}

GramLattice::GramLattice(IntMatrix gram, std::vector<std::string> labels)
    : gram_(std::move(gram)), labels_(std::move(labels)) {
  if (!gram_.is_square()) throw std::invalid_argument("Gram matrix must be square");
  if (!gram_.is_symmetric()) throw std::invalid_argument("Gram matrix must be symmetric");
  if (gram_.rows() == 0) throw std::invalid_argument("lattice rank must be positive");
  if (!labels_.empty() && labels_.size() != gram_.rows())
    throw std::invalid_argument("basis label count does not match rank");
}

std::string GramLattice::label(std::size_t i) const {
  if (i < labels_.size()) return labels_[i];
  return "b" + std::to_string(i);
}

std::size_t GramLattice::index_of(const std::string& name) const {
  const auto it = std::find(labels_.begin(), labels_.end(), name);
  if (it == labels_.end()) throw std::out_of_range("unknown basis label '" + name + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

IntVector GramLattice::basis_vector(const std::string& name) const {
  IntVector out(rank());
  out[index_of(name)] = 1;
  return out;
}

ScalarVector GramLattice::combination(std::initializer_list<std::pair<std::string, ScalarPolynomial>> terms) const {
  ScalarVector out(rank());
  for (const auto& [name, coef] : terms) out[index_of(name)] += coef;
  return out;
}

GramLattice hyperbolic_plane(const std::string& first, const std::string& second) {
  return GramLattice(IntMatrix{{0, 1}, {1, 0}}, {first, second});
}

const IntMatrix& minus_e8_gram() {
  // Bourbaki labels 1..8: edges 1-3, 3-4, 4-5, 5-6, 6-7, 7-8 and 2-4.
  static const IntMatrix gram{
      {-2, 0, -1, 0, 0, 0, 0, 0},   //
      {0, -2, 0, -1, 0, 0, 0, 0},   //
      {-1, 0, -2, -1, 0, 0, 0, 0},  //
      {0, -1, -1, -2, -1, 0, 0, 0}, //
      {0, 0, 0, -1, -2, -1, 0, 0},  //
      {0, 0, 0, 0, -1, -2, -1, 0},  //
      {0, 0, 0, 0, 0, -1, -2, -1},  //
      {0, 0, 0, 0, 0, 0, -1, -2},
  };
  return gram;
}

GramLattice minus_e8(const std::string& prefix) {
  std::vector<std::string> labels;
  for (int i = 1; i <= 8; ++i) labels.push_back(prefix + std::to_string(i));
  return GramLattice(minus_e8_gram(), std::move(labels));
}

GramLattice direct_sum(const std::vector<GramLattice>& parts) {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.rank();
  IntMatrix gram(n, n);
  std::vector<std::string> labels;
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.rank(); ++i) {
      for (std::size_t j = 0; j < p.rank(); ++j) gram(offset + i, offset + j) = p.gram()(i, j);
      labels.push_back(p.label(i));
    }
    offset += p.rank();
  }
  return GramLattice(std::move(gram), std::move(labels));
}

const GramLattice& k3_lattice() {
  static const GramLattice lattice = direct_sum({
      hyperbolic_plane("u", "v"),
      hyperbolic_plane("x", "y"),
      hyperbolic_plane("z", "t"),
      minus_e8("e8a"),
      minus_e8("e8b"),
  });
  return lattice;
}

Integer inner(const IntVector& x, const IntVector& y, const GramLattice& lat) {
  if (x.size() != lat.rank() || y.size() != lat.rank()) throw DimensionMismatch("inner: vector length differs from rank");
  Integer acc = 0;
  for (std::size_t i = 0; i < lat.rank(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < lat.rank(); ++j) acc += x[i] * lat.gram()(i, j) * y[j];
  }
  return acc;
}

ScalarVector gram_times(const GramLattice& lat, const ScalarVector& x) {
  if (x.size() != lat.rank()) throw DimensionMismatch("Gram product: vector length differs from rank");
  ScalarVector out(lat.rank());
  for (std::size_t i = 0; i < lat.rank(); ++i)
    for (std::size_t j = 0; j < lat.rank(); ++j) {
      const Integer& g = lat.gram()(i, j);
      if (g != 0 && !x[j].is_zero()) out[i] += ScalarPolynomial(MultiquadraticNumber(Rational(g))) * x[j];
    }
  return out;
}

ScalarPolynomial inner(const ScalarVector& x, const ScalarVector& y, const GramLattice& lat) {
  if (x.size() != lat.rank() || y.size() != lat.rank()) throw DimensionMismatch("inner: vector length differs from rank");
  const ScalarVector gy = gram_times(lat, y);
  ScalarPolynomial acc;
  for (std::size_t i = 0; i < lat.rank(); ++i)
    if (!x[i].is_zero() && !gy[i].is_zero()) acc += x[i] * gy[i];
  return acc;
}

Integer determinant(const GramLattice& lat) { return determinant(lat.gram()); }

bool is_even(const GramLattice& lat) {
  for (std::size_t i = 0; i < lat.rank(); ++i)
    if (mpz_odd_p(lat.gram()(i, i).get_mpz_t())) return false;
  return true;
}

bool is_unimodular(const GramLattice& lat) {
  const Integer d = determinant(lat);
  return d == 1 || d == -1;
}

std::pair<std::size_t, std::size_t> signature(const GramLattice& lat) {
  const Inertia in = inertia(to_rational(lat.gram()));
  if (in.zero != 0) throw DegenerateForm("form has " + std::to_string(in.zero) + " null direction(s)");
  return {in.positive, in.negative};
}

IntMatrix restricted_gram(const IntMatrix& basis, const GramLattice& lat) {
  if (basis.rows() != lat.rank()) throw DimensionMismatch("sublattice basis rows differ from rank");
  return basis.transpose() * lat.gram() * basis;
}

IntVector combine_columns(const IntMatrix& basis, const IntVector& coeffs) {
  if (basis.cols() != coeffs.size()) throw DimensionMismatch("coefficient count differs from basis size");
  IntVector out(basis.rows());
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    if (coeffs[j] == 0) continue;
    for (std::size_t i = 0; i < basis.rows(); ++i) out[i] += basis(i, j) * coeffs[j];
  }
  return out;
}

}  // namespace k3lat
