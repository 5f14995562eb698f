#pragma once

#include "k3lat/lattice.hpp"
#include "k3lat/root_search.hpp"

#include <optional>
#include <string>

namespace k3lat {

/// The complex line [w1 + i*w2] of the complexified lattice, stored as a real pair.
/// Pairs related by (w1, w2) -> (a*w1 - b*w2, b*w1 + a*w2) describe the same line.
struct PeriodPoint {
  ScalarVector w1;
  ScalarVector w2;
};

/// Kaehler class kappa together with a period point.
struct MarkedPairPoint {
  ScalarVector kappa;
  PeriodPoint period;
};

struct Membership {
  bool member = false;
  /// Empty on success, otherwise names the first failing condition.
  std::string diagnostic;
  /// Root orthogonal to the positive 3-plane, when that is the cause of failure.
  std::optional<IntVector> witness;
  /// Present once the root search ran.
  std::optional<RootSearchResult> roots;
};

/// <w1,w1> == <w2,w2>, <w1,w2> == 0 and <w1,w1> > 0, checked exactly.
/// Coordinates must be constant in s (std::invalid_argument otherwise).
Membership in_omega(const PeriodPoint& p, const GramLattice& lat = k3_lattice());

/// kappa positive, orthogonal to w1 and w2, period in Omega, and no root orthogonal
/// to span{kappa, w1, w2}.
Membership in_k_omega_zero(const MarkedPairPoint& m, const GramLattice& lat = k3_lattice(),
                           EnumerationOptions options = {});

/// The same period line with the representative rotated and scaled by a + b*i.
PeriodPoint rotate(const PeriodPoint& p, const Rational& a, const Rational& b);

}  // namespace k3lat
