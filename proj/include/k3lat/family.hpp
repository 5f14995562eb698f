#pragma once

#include "k3lat/affine_family.hpp"
#include "k3lat/isometry.hpp"
#include "k3lat/obstruction.hpp"
#include "k3lat/period_domain.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace k3lat {

struct EquivarianceResult {
  bool holds = false;
  /// sigma with g . fam(s) = fam(s + sigma), when one exists.
  std::optional<Rational> shift;
  std::string detail;
};

/// Solves for a rational shift from the coefficients, then checks the identity
/// g . fam(s) = fam(s + sigma) coefficientwise in all coordinates.
EquivarianceResult check_equivariance(const AffineFamily& fam, const LatticeIsometry& g);

struct AffineRank {
  /// Rank of the integer vectors inside the direction space of the kappa image.
  std::size_t integral_rank = 0;
  /// Dimension of that direction space.
  std::size_t dimension = 0;
  bool full_rank() const { return integral_rank == dimension; }
  friend bool operator==(const AffineRank&, const AffineRank&) = default;
};

/// The direction space is spanned by the coefficients of s^d, d >= 1, of kappa.
AffineRank integral_affine_rank(const AffineFamily& fam, const GramLattice& lat = k3_lattice());

/// Rank data for the real span of the given directions in Z^n.
AffineRank integral_span_rank(const std::vector<std::vector<MultiquadraticNumber>>& directions, std::size_t n);

/// Translation by sigma on the parameter line: free, proper and cocompact iff sigma != 0.
bool check_action_discreteness(const Rational& shift);

struct SampleOutcome {
  Rational s;
  bool member = false;
  std::string diagnostic;
  std::optional<IntVector> witness;
  std::size_t kernel_rank = 0;
  std::size_t root_count = 0;
};

SampleOutcome verify_sample(const AffineFamily& fam, const Rational& s, const GramLattice& lat = k3_lattice());

/// Runs verify_sample over a sweep; results must come back in sweep order.
using SampleRunner = std::function<std::vector<SampleOutcome>(const AffineFamily&, const std::vector<Rational>&)>;

std::vector<SampleOutcome> run_samples_sequential(const AffineFamily& fam, const std::vector<Rational>& sweep);

struct SweepSummary {
  std::size_t points = 0;
  std::size_t members = 0;
  std::size_t witnesses = 0;
  std::vector<SampleOutcome> failures;
};

SweepSummary summarize(const std::vector<SampleOutcome>& outcomes);

struct InvarianceCheck {
  bool pass = false;
  EquivarianceResult equivariance;
};

struct AffineIntegralityCheck {
  bool pass = false;
  AffineRank rank;
  /// kappa is injective in the parameter, so the family is its own section.
  bool section_injective = false;
};

struct ActionCheck {
  bool pass = false;
  std::optional<Rational> translation;
};

struct InclusionCheck {
  bool pass = false;
  std::optional<ObstructionTrace> symbolic;
  std::optional<SweepSummary> sweep;
};

struct VerificationCertificate {
  InvarianceCheck invariance;
  AffineIntegralityCheck affine_integrality;
  ActionCheck action_properties;
  InclusionCheck inclusion;
  bool all_pass = false;
};

struct VerifyOptions {
  bool symbolic = true;
  bool samples = true;
  std::vector<Rational> sweep;
  SampleRunner runner = run_samples_sequential;
};

/// Every check runs even after an earlier one fails. Throws InvariantViolation if
/// the symbolic obstruction succeeds while a sample point has a root.
VerificationCertificate verify_theorem_hypotheses(const AffineFamily& fam, const LatticeIsometry& g,
                                                  const VerifyOptions& options);

/// n evenly spaced rationals from lo to hi inclusive (n >= 1; n == 1 gives lo).
std::vector<Rational> linspace(const Rational& lo, const Rational& hi, std::size_t n);

/// k/100 for k = -500..500.
std::vector<Rational> default_sweep();

}  // namespace k3lat
