#include "k3lat/affine_family.hpp"

namespace k3lat {

MarkedPairPoint AffineFamily::at(const Rational& s) const {
  return MarkedPairPoint{kappa.evaluate(s), PeriodPoint{w1.evaluate(s), w2.evaluate(s)}};
}

AffineFamily AffineFamily::shifted(const Rational& shift) const {
  return AffineFamily{kappa.shifted(shift), w1.shifted(shift), w2.shifted(shift), parameter_dim};
}

std::vector<MultiquadraticNumber> irrational_vector(const Rational& scale) {
  std::vector<MultiquadraticNumber> out;
  for (const auto p : kIrrationalPrimes) out.push_back(MultiquadraticNumber::sqrt_prime(p, scale));
  return out;
}

MultiquadraticNumber irrational_vector_norm(const Rational& scale) {
  const auto e = irrational_vector(scale);
  const IntMatrix& g = minus_e8_gram();
  MultiquadraticNumber acc;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      if (g(i, j) != 0) acc += MultiquadraticNumber(Rational(g(i, j))) * e[i] * e[j];
  return acc;
}

const Rational& default_irrational_scale() {
  static const Rational scale = [] {
    const MultiquadraticNumber unit_norm = irrational_vector_norm(1);
    Rational c = 1;
    while ((MultiquadraticNumber(4) + MultiquadraticNumber(c * c) * unit_norm).sign() != Sign::positive) c /= 2;
    return c;
  }();
  return scale;
}

AffineFamily paper_family(const Rational& scale) {
  const GramLattice& lat = k3_lattice();
  const ScalarPolynomial s = ScalarPolynomial::variable();
  AffineFamily fam;
  fam.kappa = lat.combination({{"u", 2}, {"v", 1}, {"y", s}});
  fam.w1 = lat.combination({{"x", 1}, {"u", -s}, {"y", 2}});
  fam.w2 = lat.combination({{"z", 1}, {"t", 2}});
  const auto e = irrational_vector(scale);
  for (std::size_t i = 0; i < e.size(); ++i) {
    fam.w1[kFirstE8Offset + i] = ScalarPolynomial(e[i]);
    fam.w2[kSecondE8Offset + i] = ScalarPolynomial(e[i]);
  }
  return fam;
}

AffineFamily paper_family() { return paper_family(default_irrational_scale()); }

}  // namespace k3lat
