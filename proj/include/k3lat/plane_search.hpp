#pragma once

#include "k3lat/family.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3lat {

// Two-parameter template, parameters (s, r):
//   kappa = a*u + v + s*y + r*t
//   w1    = x - s*u + b*y + e
//   w2    = z - r*u + b*t + f
// with e = (e', 0), f = (0, e'). phi shifts s by 1 and phi_third_plane shifts r by 1.

struct PlaneTemplate {
  Rational a;
  Rational b;
  Rational scale;
};

/// One-parameter slice: the named parameter ("s" or "r") is the indeterminate, the other is fixed.
AffineFamily plane_slice(const PlaneTemplate& tpl, const std::string& vary, const Rational& fixed);

MarkedPairPoint plane_point(const PlaneTemplate& tpl, const Rational& s, const Rational& r);

struct SliceStatus {
  std::string axis;
  bool equivariant = false;
  std::optional<Rational> shift;
  bool symbolic_success = false;
  std::string symbolic_failure;
};

struct PlaneCandidate {
  PlaneTemplate tpl;
  /// <kappa,kappa> > 0 and <w1,w1> = <w2,w2> > 0, identically in (s, r).
  bool positive = false;
  AffineRank rank;
  std::vector<SliceStatus> slices;
  std::size_t sample_points = 0;
  std::size_t sample_roots = 0;
  std::optional<std::pair<Rational, Rational>> first_root_at;
  std::optional<IntVector> first_root;
  /// Sample evidence only, never a proof over the whole parameter plane.
  bool passes_samples() const { return positive && rank.full_rank() && sample_points > 0 && sample_roots == 0; }
};

/// Evaluates one template on the (s, r) grid and runs the symbolic obstruction on both axis slices.
PlaneCandidate evaluate_plane_candidate(const PlaneTemplate& tpl, const std::vector<Rational>& s_values,
                                        const std::vector<Rational>& r_values);

}  // namespace k3lat
