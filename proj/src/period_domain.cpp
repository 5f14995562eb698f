#include "k3lat/period_domain.hpp"

#include <stdexcept>
#include <vector>

namespace k3lat {

namespace {

MultiquadraticNumber pairing(const ScalarVector& a, const ScalarVector& b, const GramLattice& lat) {
  return inner(a, b, lat).constant_term();
}

void require_constant(const ScalarVector& v, const char* name) {
  if (!v.is_constant()) throw std::invalid_argument(std::string(name) + " must have constant coordinates");
}

Membership reject(std::string diagnostic) { return Membership{false, std::move(diagnostic), std::nullopt, std::nullopt}; }

}  // namespace

Membership in_omega(const PeriodPoint& p, const GramLattice& lat) {
  require_constant(p.w1, "w1");
  require_constant(p.w2, "w2");
  const MultiquadraticNumber n1 = pairing(p.w1, p.w1, lat);
  if (pairing(p.w2, p.w2, lat) != n1) return reject("omega: <w1,w1> != <w2,w2>");
  if (n1.sign() != Sign::positive) return reject("omega: positivity");
  if (!pairing(p.w1, p.w2, lat).is_zero()) return reject("omega: <w1,w2> != 0");
  return Membership{true, {}, std::nullopt, std::nullopt};
}

Membership in_k_omega_zero(const MarkedPairPoint& m, const GramLattice& lat, EnumerationOptions options) {
  require_constant(m.kappa, "kappa");
  if (pairing(m.kappa, m.kappa, lat).sign() != Sign::positive) return reject("positivity");
  if (!pairing(m.kappa, m.period.w1, lat).is_zero() || !pairing(m.kappa, m.period.w2, lat).is_zero())
    return reject("orthogonality");
  Membership omega = in_omega(m.period, lat);
  if (!omega.member) return omega;

  const std::vector<ScalarVector> plane{m.kappa, m.period.w1, m.period.w2};
  RootSearchResult roots = find_roots_orthogonal_to(plane, Rational(0), lat, options);
  Membership out;
  out.member = roots.outcome == RootOutcome::empty;
  if (!out.member) {
    out.diagnostic = "root orthogonal to the positive 3-plane";
    out.witness = roots.witness;
  }
  out.roots = std::move(roots);
  return out;
}

PeriodPoint rotate(const PeriodPoint& p, const Rational& a, const Rational& b) {
  if (is_zero(a) && is_zero(b)) throw std::invalid_argument("rotation by zero");
  const ScalarPolynomial pa(MultiquadraticNumber{a});
  const ScalarPolynomial pb(MultiquadraticNumber{b});
  return PeriodPoint{pa * p.w1 - pb * p.w2, pb * p.w1 + pa * p.w2};
}

}  // namespace k3lat
