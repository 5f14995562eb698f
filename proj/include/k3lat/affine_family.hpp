#pragma once

#include "k3lat/lattice.hpp"
#include "k3lat/period_domain.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace k3lat {

/// One-parameter family s -> (kappa(s), [w1(s) + i*w2(s)]) of candidate marked pairs,
/// coordinates polynomial in s in the basis of the K3 lattice.
struct AffineFamily {
  ScalarVector kappa;
  ScalarVector w1;
  ScalarVector w2;
  std::size_t parameter_dim = 1;

  MarkedPairPoint at(const Rational& s) const;
  std::vector<ScalarVector> vectors() const { return {kappa, w1, w2}; }
  AffineFamily shifted(const Rational& shift) const;
  friend bool operator==(const AffineFamily&, const AffineFamily&) = default;
};

/// Primes whose square roots carry the irrational vector, one per -E8 basis vector.
inline constexpr std::array<std::uint32_t, 8> kIrrationalPrimes{2, 3, 5, 7, 11, 13, 17, 19};

/// scale * (sqrt 2, sqrt 3, ..., sqrt 19) in the -E8 basis.
std::vector<MultiquadraticNumber> irrational_vector(const Rational& scale);

/// Norm of irrational_vector(scale) in -E8 (negative for scale != 0).
MultiquadraticNumber irrational_vector_norm(const Rational& scale);

/// Largest power of 1/2 with 4 + <e', e'> > 0.
const Rational& default_irrational_scale();

/// kappa = 2u + v + s*y, w1 = x - s*u + 2y + e, w2 = z + 2t + f with e = (e', 0)
/// and f = (0, e') for e' = irrational_vector(scale).
AffineFamily paper_family(const Rational& scale);
AffineFamily paper_family();

}  // namespace k3lat
