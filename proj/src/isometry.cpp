#include "k3lat/isometry.hpp"

#include "k3lat/errors.hpp"

#include <stdexcept>

namespace k3lat {

bool is_isometry(const IntMatrix& m, const GramLattice& lat) {
  if (m.rows() != lat.rank() || m.cols() != lat.rank()) throw DimensionMismatch("isometry matrix shape differs from rank");
  return m.transpose() * lat.gram() * m == lat.gram();
}

LatticeIsometry::LatticeIsometry(IntMatrix matrix, GramLattice ambient)
    : matrix_(std::move(matrix)), ambient_(std::move(ambient)) {
  if (!is_isometry(matrix_, ambient_)) throw NotAnIsometry("matrix does not preserve the Gram form");
}

LatticeIsometry LatticeIsometry::identity(const GramLattice& lat) {
  return LatticeIsometry(IntMatrix::identity(lat.rank()), lat);
}

IntVector LatticeIsometry::operator()(const IntVector& x) const { return combine_columns(matrix_, x); }

LatticeIsometry compose(const LatticeIsometry& outer, const LatticeIsometry& inner) {
  if (!(outer.ambient() == inner.ambient())) throw DimensionMismatch("composing isometries of different lattices");
  return LatticeIsometry(outer.matrix() * inner.matrix(), outer.ambient());
}

LatticeIsometry power(const LatticeIsometry& g, unsigned k) {
  LatticeIsometry out = LatticeIsometry::identity(g.ambient());
  for (unsigned i = 0; i < k; ++i) out = compose(g, out);
  return out;
}

int orientation_character(const LatticeIsometry& g, const std::vector<IntVector>& positive_basis) {
  const GramLattice& lat = g.ambient();
  const std::size_t k = positive_basis.size();
  IntMatrix plane_gram(k, k);
  IntMatrix pairing(k, k);  // <p_i, g p_j>
  for (std::size_t j = 0; j < k; ++j) {
    const IntVector image = g(positive_basis[j]);
    for (std::size_t i = 0; i < k; ++i) {
      plane_gram(i, j) = inner(positive_basis[i], positive_basis[j], lat);
      pairing(i, j) = inner(positive_basis[i], image, lat);
    }
  }
  if (!certify_positive_definite(plane_gram)) throw NotPositivePlane("reference subspace is not positive definite");
  // Projection matrix is plane_gram^{-1} * pairing; det(plane_gram) > 0, so the
  // sign of the projected determinant is the sign of det(pairing).
  const Integer d = determinant(pairing);
  if (d == 0) throw InvariantViolation("projection of a positive subspace under an isometry is singular");
  return d > 0 ? 1 : -1;
}

std::vector<IntVector> k3_reference_plane() {
  const GramLattice& lat = k3_lattice();
  return {lat.basis_vector("u") + lat.basis_vector("v"), lat.basis_vector("x") + lat.basis_vector("y"),
          lat.basis_vector("z") + lat.basis_vector("t")};
}

bool is_o_plus(const LatticeIsometry& g) {
  if (!(g.ambient() == k3_lattice())) throw std::invalid_argument("O+ membership is defined here for the K3 lattice");
  return orientation_character(g, k3_reference_plane()) > 0;
}

namespace {

// Isometry of the K3 lattice mapping basis vector `from` to itself plus `delta`
// for each listed (from, target, coefficient) triple.
LatticeIsometry unipotent(std::initializer_list<std::tuple<const char*, const char*, long>> moves) {
  const GramLattice& lat = k3_lattice();
  IntMatrix m = IntMatrix::identity(lat.rank());
  for (const auto& [from, to, c] : moves) m(lat.index_of(to), lat.index_of(from)) += c;
  return LatticeIsometry(std::move(m), lat);
}

}  // namespace

LatticeIsometry phi() { return unipotent({{"v", "y", 1}, {"x", "u", -1}}); }

LatticeIsometry phi_third_plane() { return unipotent({{"v", "t", 1}, {"z", "u", -1}}); }

LatticeIsometry minus_identity() {
  return LatticeIsometry(-IntMatrix::identity(kK3Rank), k3_lattice());
}

LatticeIsometry swap_e8_blocks() {
  IntMatrix m = IntMatrix::identity(kK3Rank);
  for (std::size_t i = 0; i < 8; ++i) {
    const std::size_t a = kFirstE8Offset + i;
    const std::size_t b = kSecondE8Offset + i;
    m(a, a) = 0;
    m(b, b) = 0;
    m(b, a) = 1;
    m(a, b) = 1;
  }
  return LatticeIsometry(std::move(m), k3_lattice());
}

LatticeIsometry signed_block_permutation(const std::array<int, 3>& perm, const std::array<int, 5>& signs) {
  if (perm[0] == perm[1] || perm[0] == perm[2] || perm[1] == perm[2])
    throw std::invalid_argument("plane permutation entries must be distinct");
  for (int sgn_value : signs)
    if (sgn_value != 1 && sgn_value != -1) throw std::invalid_argument("block signs must be +1 or -1");
  IntMatrix m(kK3Rank, kK3Rank);
  for (std::size_t plane = 0; plane < 3; ++plane) {
    const std::size_t target = static_cast<std::size_t>(perm[plane]);
    if (target > 2) throw std::invalid_argument("plane permutation entry out of range");
    for (std::size_t k = 0; k < 2; ++k) m(2 * target + k, 2 * plane + k) = signs[plane];
  }
  for (std::size_t block = 0; block < 2; ++block) {
    const std::size_t offset = block == 0 ? kFirstE8Offset : kSecondE8Offset;
    for (std::size_t i = 0; i < 8; ++i) m(offset + i, offset + i) = signs[3 + block];
  }
  return LatticeIsometry(std::move(m), k3_lattice());
}

ScalarVector apply(const LatticeIsometry& g, const ScalarVector& x) {
  const IntMatrix& m = g.matrix();
  if (x.size() != m.cols()) throw DimensionMismatch("apply: vector length differs from isometry size");
  ScalarVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0 && !x[j].is_zero()) out[i] += ScalarPolynomial(MultiquadraticNumber(Rational(m(i, j)))) * x[j];
  return out;
}

}  // namespace k3lat
