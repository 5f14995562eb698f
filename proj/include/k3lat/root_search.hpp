#pragma once

#include "k3lat/lattice.hpp"
#include "k3lat/multiquadratic.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace k3lat {

/// Where a split linear form came from: the coefficient of s^power and of the
/// monomial sqrt(prod monomial) in <delta, vectors[vector]>.
struct FormOrigin {
  std::size_t vector = 0;
  std::size_t power = 0;
  Radical monomial;
  std::string to_string() const;
};

struct LinearForm {
  IntVector coefficients;
  FormOrigin origin;
};

/// Integer linear forms in the coordinates of an unknown lattice vector delta.
/// An integer delta is orthogonal to every input vector iff all forms vanish on it.
struct LinearConstraintSystem {
  std::size_t unknowns = 0;
  std::vector<LinearForm> forms;

  /// One row per form.
  IntMatrix matrix() const;
};

/// Expands each <delta, w> over the monomial basis of the multiquadratic field and
/// over the powers of s, and requires every coefficient to vanish. Rows are scaled
/// to primitive integer vectors and duplicates dropped. Constant vectors give the
/// fixed-s system; vectors polynomial in s give the system for s as an indeterminate.
LinearConstraintSystem split_constraints(std::span<const ScalarVector> vectors, const GramLattice& lat);

/// Integer solution sublattice of a constraint system, basis as columns.
struct KernelLattice {
  IntMatrix basis;
  std::size_t rank() const { return basis.cols(); }
};

KernelLattice kernel_lattice(const LinearConstraintSystem& sys);

struct EnumerationOptions {
  /// LLL-reduce the restricted form first. Never changes the result set.
  bool reduce_basis = false;
};

/// All integer lambda with lambda^T * form * lambda == value, for a positive definite
/// integer form (Fincke-Pohst branch and bound with exact pruning).
/// Throws IndefiniteRestriction if the form is not positive definite.
std::vector<IntVector> enumerate_form(const IntMatrix& form, const Integer& value, EnumerationOptions options = {});

/// Leading principal minors of -B^T G B when that matrix is positive definite.
/// Throws IndefiniteRestriction otherwise.
std::vector<Integer> certify_negative_definite(const IntMatrix& basis, const GramLattice& lat);

/// Every v in the sublattice spanned by the basis columns with <v, v> == target,
/// in ambient coordinates and canonical order. Requires target < 0 and a negative
/// definite restriction (IndefiniteRestriction otherwise).
std::vector<IntVector> enumerate_norm(const IntMatrix& basis, const GramLattice& lat, const Integer& target,
                                      EnumerationOptions options = {});

/// Canonical order: squared Euclidean length of the coordinates, then lexicographic.
bool canonical_less(const IntVector& a, const IntVector& b);

enum class RootOutcome { empty, witness };

struct RootSearchResult {
  RootOutcome outcome = RootOutcome::empty;
  /// Canonically smallest root, when any exists.
  std::optional<IntVector> witness;
  /// All roots found, in canonical order.
  std::vector<IntVector> roots;
  std::size_t count() const { return roots.size(); }
  std::size_t kernel_rank = 0;
  IntMatrix kernel_basis;
  /// Leading principal minors of the negated restricted Gram (all positive).
  std::vector<Integer> definiteness_minors;
  Integer target = -2;
};

/// Decides whether some root delta (delta^2 = -2) of the lattice is orthogonal to
/// every vector evaluated at s. The evaluated vectors must span a positive definite
/// subspace (NotPositivePlane otherwise). Witnesses are re-verified independently.
RootSearchResult find_roots_orthogonal_to(std::span<const ScalarVector> vectors, const Rational& s,
                                          const GramLattice& lat = k3_lattice(), EnumerationOptions options = {});

/// True iff the Gram matrix of the (constant) vectors is positive definite.
bool spans_positive_subspace(std::span<const ScalarVector> vectors, const GramLattice& lat);

}  // namespace k3lat
