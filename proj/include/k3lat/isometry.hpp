#pragma once

#include "k3lat/lattice.hpp"

#include <array>

namespace k3lat {

/// Integer automorphism of a Gram lattice, acting on coordinate columns:
/// column j of the matrix is the image of basis vector j.
class LatticeIsometry {
 public:
  /// Throws NotAnIsometry if m^T G m != G, DimensionMismatch on shape errors.
  LatticeIsometry(IntMatrix matrix, GramLattice ambient);

  static LatticeIsometry identity(const GramLattice& lat);

  const IntMatrix& matrix() const { return matrix_; }
  const GramLattice& ambient() const { return ambient_; }

  IntVector operator()(const IntVector& x) const;
  friend bool operator==(const LatticeIsometry& a, const LatticeIsometry& b) { return a.matrix_ == b.matrix_; }

 private:
  IntMatrix matrix_;
  GramLattice ambient_;
};

/// m^T G m == G. Throws DimensionMismatch unless m is square of the lattice rank.
bool is_isometry(const IntMatrix& m, const GramLattice& lat);

/// outer after inner: (outer o inner)(x) = outer(inner(x)), matrix outer * inner.
LatticeIsometry compose(const LatticeIsometry& outer, const LatticeIsometry& inner);

/// g^k for k >= 0.
LatticeIsometry power(const LatticeIsometry& g, unsigned k);

/// Sign of det(projection onto P of g restricted to P) for a positive definite
/// reference subspace P spanned by the given lattice vectors: +1 if g preserves
/// the orientation of positive definite subspaces of that dimension, -1 otherwise.
int orientation_character(const LatticeIsometry& g, const std::vector<IntVector>& positive_basis);

/// Reference positive 3-plane of the K3 lattice: u+v, x+y, z+t.
std::vector<IntVector> k3_reference_plane();

/// Membership in O+ of the K3 lattice. Throws std::invalid_argument if the
/// ambient lattice is not the K3 lattice.
bool is_o_plus(const LatticeIsometry& g);

/// u -> u, v -> v + y, x -> x - u, y -> y, identity on z, t and both -E8 blocks.
LatticeIsometry phi();

/// Same shape on the third hyperbolic plane: v -> v + t, z -> z - u.
LatticeIsometry phi_third_plane();

/// -identity on the K3 lattice.
LatticeIsometry minus_identity();

/// Exchanges the two -E8 blocks of the K3 lattice.
LatticeIsometry swap_e8_blocks();

/// Permutes the three hyperbolic planes (perm[i] = target plane of plane i) and
/// multiplies each of the five blocks (3 H, 2 -E8) by the given sign.
LatticeIsometry signed_block_permutation(const std::array<int, 3>& perm, const std::array<int, 5>& signs);

ScalarVector apply(const LatticeIsometry& g, const ScalarVector& x);

}  // namespace k3lat
