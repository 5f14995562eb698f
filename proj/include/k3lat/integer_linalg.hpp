#pragma once

#include "k3lat/lattice.hpp"
#include "k3lat/matrix.hpp"

#include <optional>
#include <vector>

namespace k3lat {

/// Column echelon form A * U = E of an integer matrix, U unimodular.
/// The first `rank` columns of E are in echelon form (pivot rows strictly
/// increasing, positive pivots); the remaining columns are zero, so the trailing
/// columns of U form a basis of the integer kernel of A.
struct ColumnEchelon {
  IntMatrix reduced;
  IntMatrix transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};

ColumnEchelon column_echelon(const IntMatrix& a);

/// Basis (as columns, n x k) of {x in Z^n : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

/// Some x in Z^n with A x = b, or std::nullopt if none exists.
std::optional<IntVector> solve_integer_system(const IntMatrix& a, const IntVector& b);

/// Result of LLL on a positive definite Gram matrix: reduced = T^T * gram * T.
struct LllResult {
  IntMatrix transform;
  IntMatrix reduced;
};

/// Scales a rational row to a primitive integer row whose first nonzero entry is
/// positive; std::nullopt for the zero row.
std::optional<IntVector> primitive_integer_row(const std::vector<Rational>& row);

/// Exact LLL reduction (delta = 3/4) of a positive definite integer Gram matrix.
LllResult lll_reduce(const IntMatrix& gram);

}  // namespace k3lat
