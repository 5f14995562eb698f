#include "k3lat/family.hpp"

#include "k3lat/errors.hpp"
#include "k3lat/integer_linalg.hpp"

#include <map>

namespace k3lat {

namespace {

constexpr const char* kVectorNames[] = {"kappa", "w1", "w2"};

std::optional<Rational> solve_shift(const std::vector<ScalarVector>& source, const std::vector<ScalarVector>& image,
                                    std::string& detail) {
  for (std::size_t v = 0; v < source.size(); ++v)
    for (std::size_t i = 0; i < source[v].size(); ++i) {
      const ScalarPolynomial& a = source[v][i];
      const ScalarPolynomial& b = image[v][i];
      const auto d = a.degree();
      if (d < 1) continue;
      if (b.degree() != d) {
        detail = std::string(kVectorNames[v]) + ": degree changes under the isometry";
        return std::nullopt;
      }
      // Coefficient of s^(d-1) in a(s + sigma) is a_(d-1) + d*sigma*a_d.
      const auto n = static_cast<std::size_t>(d);
      const MultiquadraticNumber sigma =
          (b.coefficient(n - 1) - a.coefficient(n - 1)) / (MultiquadraticNumber(static_cast<long>(n)) * a.coefficient(n));
      if (!sigma.is_rational()) {
        detail = std::string(kVectorNames[v]) + ": no rational shift";
        return std::nullopt;
      }
      return sigma.rational_part();
    }
  return Rational(0);
}

// Rows spanning the kernel of the matrix whose rows are `rows`, over the multiquadratic field.
std::vector<std::vector<MultiquadraticNumber>> field_kernel(std::vector<std::vector<MultiquadraticNumber>> rows,
                                                            std::size_t n, std::size_t& rank) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const MultiquadraticNumber inv = rows[r][c].inverse();
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c].is_zero()) continue;
      const MultiquadraticNumber f = rows[k][c];
      for (std::size_t j = 0; j < n; ++j) rows[k][j] -= f * rows[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  rank = r;
  std::vector<std::vector<MultiquadraticNumber>> kernel;
  for (std::size_t f = 0; f < n; ++f) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), f) != pivot_cols.end()) continue;
    std::vector<MultiquadraticNumber> x(n);
    x[f] = 1;
    for (std::size_t k = 0; k < r; ++k) x[pivot_cols[k]] = -rows[k][f];
    kernel.push_back(std::move(x));
  }
  return kernel;
}

}  // namespace

EquivarianceResult check_equivariance(const AffineFamily& fam, const LatticeIsometry& g) {
  EquivarianceResult out;
  const auto source = fam.vectors();
  std::vector<ScalarVector> image;
  for (const auto& v : source) image.push_back(apply(g, v));
  const auto sigma = solve_shift(source, image, out.detail);
  if (!sigma) return out;
  const AffineFamily target = fam.shifted(*sigma);
  const auto expected = target.vectors();
  for (std::size_t v = 0; v < source.size(); ++v)
    for (std::size_t i = 0; i < source[v].size(); ++i)
      if (!(image[v][i] == expected[v][i])) {
        out.detail = std::string(kVectorNames[v]) + " coordinate " + std::to_string(i) + ": " + to_string(image[v][i]) +
                     " != " + to_string(expected[v][i]);
        return out;
      }
  out.holds = true;
  out.shift = sigma;
  out.detail = "g . f(s) = f(s + " + format_rational(*sigma) + ")";
  return out;
}

AffineRank integral_affine_rank(const AffineFamily& fam, const GramLattice& lat) {
  if (fam.kappa.size() != lat.rank()) throw DimensionMismatch("kappa length differs from lattice rank");
  std::vector<std::vector<MultiquadraticNumber>> directions;
  for (std::ptrdiff_t d = 1; d <= fam.kappa.degree(); ++d) directions.push_back(fam.kappa.coefficient(d));
  return integral_span_rank(directions, lat.rank());
}

AffineRank integral_span_rank(const std::vector<std::vector<MultiquadraticNumber>>& directions, std::size_t n) {
  for (const auto& d : directions)
    if (d.size() != n) throw DimensionMismatch("direction length differs from lattice rank");
  AffineRank out;
  const auto annihilator = field_kernel(directions, n, out.dimension);
  if (out.dimension == 0) return out;

  // An integer vector lies in the direction space iff every annihilating functional
  // vanishes on it, monomial by monomial.
  std::vector<IntVector> forms;
  for (const auto& a : annihilator) {
    std::map<Radical, std::vector<Rational>> parts;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [r, q] : a[i].terms()) {
        auto [it, inserted] = parts.try_emplace(r, std::vector<Rational>(n));
        it->second[i] = q;
      }
    for (const auto& [r, row] : parts)
      if (auto f = primitive_integer_row(row)) forms.push_back(std::move(*f));
  }
  if (forms.empty()) {
    out.integral_rank = n;
    return out;
  }
  IntMatrix system(forms.size(), n);
  for (std::size_t r = 0; r < forms.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) system(r, c) = forms[r][c];
  out.integral_rank = integer_kernel(system).cols();
  return out;
}

bool check_action_discreteness(const Rational& shift) { return !is_zero(shift); }

SampleOutcome verify_sample(const AffineFamily& fam, const Rational& s, const GramLattice& lat) {
  SampleOutcome out;
  out.s = s;
  const Membership m = in_k_omega_zero(fam.at(s), lat);
  out.member = m.member;
  out.diagnostic = m.diagnostic;
  out.witness = m.witness;
  if (m.roots) {
    out.kernel_rank = m.roots->kernel_rank;
    out.root_count = m.roots->count();
  }
  return out;
}

std::vector<SampleOutcome> run_samples_sequential(const AffineFamily& fam, const std::vector<Rational>& sweep) {
  std::vector<SampleOutcome> out;
  out.reserve(sweep.size());
  for (const auto& s : sweep) out.push_back(verify_sample(fam, s));
  return out;
}

SweepSummary summarize(const std::vector<SampleOutcome>& outcomes) {
  SweepSummary out;
  out.points = outcomes.size();
  for (const auto& o : outcomes) {
    if (o.member) {
      ++out.members;
      continue;
    }
    if (o.witness) ++out.witnesses;
    out.failures.push_back(o);
  }
  return out;
}

VerificationCertificate verify_theorem_hypotheses(const AffineFamily& fam, const LatticeIsometry& g,
                                                  const VerifyOptions& options) {
  if (!options.symbolic && !options.samples) throw std::invalid_argument("no inclusion check selected");
  VerificationCertificate cert;

  cert.invariance.equivariance = check_equivariance(fam, g);
  cert.invariance.pass = cert.invariance.equivariance.holds;

  cert.affine_integrality.rank = integral_affine_rank(fam);
  cert.affine_integrality.section_injective = cert.affine_integrality.rank.dimension == fam.parameter_dim;
  cert.affine_integrality.pass =
      cert.affine_integrality.rank.full_rank() && cert.affine_integrality.section_injective;

  cert.action_properties.translation = cert.invariance.equivariance.shift;
  cert.action_properties.pass =
      cert.action_properties.translation && check_action_discreteness(*cert.action_properties.translation);

  InclusionCheck& inc = cert.inclusion;
  inc.pass = true;
  if (options.symbolic) {
    inc.symbolic = symbolic_root_obstruction(fam);
    inc.pass = inc.pass && inc.symbolic->success;
  }
  if (options.samples) {
    if (options.sweep.empty()) throw std::invalid_argument("empty sweep");
    const auto outcomes = options.runner(fam, options.sweep);
    if (outcomes.size() != options.sweep.size()) throw InvariantViolation("sample runner dropped points");
    for (std::size_t i = 0; i < outcomes.size(); ++i)
      if (outcomes[i].s != options.sweep[i]) throw InvariantViolation("sample runner reordered points");
    inc.sweep = summarize(outcomes);
    inc.pass = inc.pass && inc.sweep->failures.empty();
    if (inc.symbolic && inc.symbolic->success && inc.sweep->witnesses > 0)
      throw InvariantViolation("symbolic obstruction holds but a sample point has an orthogonal root");
  }

  cert.all_pass = cert.invariance.pass && cert.affine_integrality.pass && cert.action_properties.pass && inc.pass;
  return cert;
}

std::vector<Rational> linspace(const Rational& lo, const Rational& hi, std::size_t n) {
  if (n == 0) throw std::invalid_argument("sample count must be positive");
  if (n == 1) return {lo};
  std::vector<Rational> out;
  out.reserve(n);
  const Rational step = (hi - lo) / Rational(static_cast<long>(n - 1));
  for (std::size_t k = 0; k < n; ++k) out.push_back(Rational(lo + step * static_cast<long>(k)));
  return out;
}

std::vector<Rational> default_sweep() {
  std::vector<Rational> out;
  for (long k = -500; k <= 500; ++k) out.push_back(Rational(k, 100));
  for (auto& q : out) q.canonicalize();
  return out;
}

}  // namespace k3lat
