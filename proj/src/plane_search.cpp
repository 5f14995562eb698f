#include "k3lat/plane_search.hpp"

#include <stdexcept>

namespace k3lat {

namespace {

struct PlaneVectors {
  ScalarVector kappa;
  ScalarVector w1;
  ScalarVector w2;
};

PlaneVectors build(const PlaneTemplate& tpl, const ScalarPolynomial& s, const ScalarPolynomial& r) {
  const GramLattice& lat = k3_lattice();
  const ScalarPolynomial a(MultiquadraticNumber(tpl.a));
  const ScalarPolynomial b(MultiquadraticNumber(tpl.b));
  PlaneVectors out{lat.combination({{"u", a}, {"v", 1}, {"y", s}, {"t", r}}),
                   lat.combination({{"x", 1}, {"u", -s}, {"y", b}}),
                   lat.combination({{"z", 1}, {"u", -r}, {"t", b}})};
  const auto e = irrational_vector(tpl.scale);
  for (std::size_t i = 0; i < e.size(); ++i) {
    out.w1[kFirstE8Offset + i] += ScalarPolynomial(e[i]);
    out.w2[kSecondE8Offset + i] += ScalarPolynomial(e[i]);
  }
  return out;
}

}  // namespace

AffineFamily plane_slice(const PlaneTemplate& tpl, const std::string& vary, const Rational& fixed) {
  const ScalarPolynomial var = ScalarPolynomial::variable();
  const ScalarPolynomial other(MultiquadraticNumber{fixed});
  PlaneVectors v;
  if (vary == "s") v = build(tpl, var, other);
  else if (vary == "r") v = build(tpl, other, var);
  else throw std::invalid_argument("slice axis must be s or r");
  return AffineFamily{v.kappa, v.w1, v.w2, 1};
}

MarkedPairPoint plane_point(const PlaneTemplate& tpl, const Rational& s, const Rational& r) {
  const PlaneVectors v =
      build(tpl, ScalarPolynomial(MultiquadraticNumber{s}), ScalarPolynomial(MultiquadraticNumber{r}));
  return MarkedPairPoint{v.kappa, PeriodPoint{v.w1, v.w2}};
}

PlaneCandidate evaluate_plane_candidate(const PlaneTemplate& tpl, const std::vector<Rational>& s_values,
                                        const std::vector<Rational>& r_values) {
  PlaneCandidate out;
  out.tpl = tpl;
  const MultiquadraticNumber plane_norm = MultiquadraticNumber(2 * tpl.b) + irrational_vector_norm(tpl.scale);
  out.positive = tpl.a > 0 && plane_norm.sign() == Sign::positive;

  const GramLattice& lat = k3_lattice();
  std::vector<MultiquadraticNumber> dir_s(lat.rank()), dir_r(lat.rank());
  dir_s[lat.index_of("y")] = 1;
  dir_r[lat.index_of("t")] = 1;
  out.rank = integral_span_rank({dir_s, dir_r}, lat.rank());

  const std::pair<const char*, LatticeIsometry> axes[] = {{"s", phi()}, {"r", phi_third_plane()}};
  for (const auto& [axis, g] : axes) {
    SliceStatus st;
    st.axis = axis;
    const AffineFamily slice = plane_slice(tpl, axis, 0);
    const EquivarianceResult eq = check_equivariance(slice, g);
    st.equivariant = eq.holds;
    st.shift = eq.shift;
    if (out.positive) {
      const ObstructionTrace trace = symbolic_root_obstruction(slice);
      st.symbolic_success = trace.success;
      st.symbolic_failure = trace.failure;
    } else {
      st.symbolic_failure = "not positive";
    }
    out.slices.push_back(std::move(st));
  }

  if (!out.positive) return out;
  for (const auto& s : s_values)
    for (const auto& r : r_values) {
      const Membership m = in_k_omega_zero(plane_point(tpl, s, r));
      ++out.sample_points;
      if (m.member) continue;
      ++out.sample_roots;
      if (!out.first_root_at) {
        out.first_root_at = {s, r};
        out.first_root = m.witness;
      }
    }
  return out;
}

}  // namespace k3lat
