#pragma once

#include "k3lat/affine_family.hpp"
#include "k3lat/lattice.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace k3lat {

enum class CaseVerdict { unsolvable, solvable, undetermined };

const char* to_string(CaseVerdict v);

/// Integer quadratic equation sum c_ij * x_i * x_j = rhs left over after
/// eliminating the linear constraints; the left side is -<delta,delta>/2.
struct ResidualQuadratic {
  std::vector<std::string> variables;
  /// Keyed by (i, j) with i <= j; zero coefficients are absent.
  std::map<std::pair<std::size_t, std::size_t>, Rational> coefficients;
  Rational rhs = 1;

  std::string to_string() const;
  /// Every coefficient is an even integer.
  bool even_coefficients() const;
};

/// Roots for rational s: the constraints split over the monomials of the
/// multiquadratic field with s kept as a formal coefficient.
struct RationalParameterCase {
  /// Pivot coordinates expressed through the free ones, e.g. "d_u = -2*d_v - s*d_x".
  std::vector<std::string> parametrization;
  /// s-dependent contributions to <delta,delta>, one per Gram entry, before cancellation.
  std::vector<std::string> s_dependent_terms;
  /// Net s-dependent part of <delta,delta> after collecting terms ("0" when they cancel).
  std::string net_s_dependence;
  bool s_terms_cancel = false;
  std::optional<ResidualQuadratic> residual;
  CaseVerdict verdict = CaseVerdict::undetermined;
  std::string method;
  std::string detail;
  std::optional<IntVector> witness;
};

/// Roots for irrational s.
struct IrrationalParameterCase {
  std::vector<std::string> constraints;
  std::size_t kernel_rank = 0;
  std::size_t radical_rank = 0;
  std::size_t root_classes = 0;
  std::size_t excluded_classes = 0;
  CaseVerdict verdict = CaseVerdict::undetermined;
  std::string detail;
  std::optional<IntVector> witness;
};

struct ObstructionTrace {
  /// True iff no root is orthogonal to the family's 3-plane for any real s.
  bool success = false;
  std::string failure;
  /// Split constraints <delta, w>, one line per monomial, s symbolic.
  std::vector<std::string> constraint_system;
  /// Coordinates of delta that vanish on every solution of the split system.
  std::vector<std::string> forced_zero;
  /// "e8a" / "e8b" when every coordinate of that -E8 block is forced to zero.
  std::vector<std::string> vanishing_blocks;
  RationalParameterCase rational;
  std::optional<IrrationalParameterCase> irrational;
  std::optional<IntVector> witness;
};

/// Decides, for all real s at once, whether a root can be orthogonal to
/// span{kappa(s), w1(s), w2(s)}, splitting on whether s is rational. Returns a
/// trace; failure (success == false) is an ordinary outcome and carries either a
/// witness root or the residual system that could not be ruled out.
ObstructionTrace symbolic_root_obstruction(const AffineFamily& fam, const GramLattice& lat = k3_lattice());

}  // namespace k3lat
