#include "k3lat/root_search.hpp"

#include "k3lat/errors.hpp"
#include "k3lat/integer_linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace k3lat {

std::string FormOrigin::to_string() const {
  std::ostringstream os;
  os << "vector " << vector << ", s^" << power << ", ";
  if (monomial.empty()) os << "rational part";
  else os << "sqrt(" << radicand(monomial).get_str() << ")";
  return os.str();
}

IntMatrix LinearConstraintSystem::matrix() const {
  IntMatrix m(forms.size(), unknowns);
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = 0; j < unknowns; ++j) m(i, j) = forms[i].coefficients[j];
  return m;
}

LinearConstraintSystem split_constraints(std::span<const ScalarVector> vectors, const GramLattice& lat) {
  LinearConstraintSystem sys;
  sys.unknowns = lat.rank();
  std::set<std::vector<Integer>> seen;
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    const ScalarVector g = gram_times(lat, vectors[j]);
    std::map<std::pair<std::size_t, Radical>, std::vector<Rational>> rows;
    for (std::size_t i = 0; i < lat.rank(); ++i) {
      const auto& coeffs = g[i].coefficients();
      for (std::size_t d = 0; d < coeffs.size(); ++d)
        for (const auto& [r, q] : coeffs[d].terms()) {
          auto [it, inserted] = rows.try_emplace({d, r}, std::vector<Rational>(lat.rank()));
          it->second[i] += q;
        }
    }
    for (const auto& [key, row] : rows) {
      auto form = primitive_integer_row(row);
      if (!form || !seen.insert(form->coords).second) continue;
      sys.forms.push_back({std::move(*form), FormOrigin{j, key.first, key.second}});
    }
  }
  return sys;
}

KernelLattice kernel_lattice(const LinearConstraintSystem& sys) {
  if (sys.forms.empty()) return {IntMatrix::identity(sys.unknowns)};
  return {integer_kernel(sys.matrix())};
}

bool canonical_less(const IntVector& a, const IntVector& b) {
  Integer na = 0;
  Integer nb = 0;
  for (const auto& x : a.coords) na += x * x;
  for (const auto& x : b.coords) nb += x * x;
  if (na != nb) return na < nb;
  return a.coords < b.coords;
}

namespace {

// q-form decomposition: x^T P x = sum_i diag[i] * (x_i + sum_{j>i} mu[i][j] x_j)^2.
struct QuadraticDecomposition {
  std::vector<Rational> diag;
  std::vector<std::vector<Rational>> mu;
};

QuadraticDecomposition decompose(const IntMatrix& p) {
  const std::size_t n = p.rows();
  QuadraticDecomposition d{std::vector<Rational>(n), std::vector<std::vector<Rational>>(n, std::vector<Rational>(n))};
  for (std::size_t i = 0; i < n; ++i) {
    Rational acc = p(i, i);
    for (std::size_t l = 0; l < i; ++l) acc -= d.mu[l][i] * d.mu[l][i] * d.diag[l];
    d.diag[i] = acc;
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational m = p(i, j);
      for (std::size_t l = 0; l < i; ++l) m -= d.mu[l][i] * d.mu[l][j] * d.diag[l];
      d.mu[i][j] = m / d.diag[i];
    }
  }
  return d;
}

class FinckePohst {
 public:
  FinckePohst(const IntMatrix& form, const Rational& value)
      : n_(form.rows()), value_(value), dec_(decompose(form)), x_(n_) {}

  std::vector<IntVector> run() {
    if (n_ == 0) return {};
    descend(n_ - 1, value_);
    return std::move(found_);
  }

 private:
  void descend(std::size_t level, const Rational& budget) {
    Rational center = 0;
    for (std::size_t j = level + 1; j < n_; ++j) center -= dec_.mu[level][j] * x_[j];
    const Rational& q = dec_.diag[level];
    auto cost = [&](const Integer& x) -> Rational {
      const Rational offset = Rational(x) - center;
      return q * offset * offset;
    };
    auto visit = [&](const Integer& x) {
      const Rational c = cost(x);
      if (c > budget) return false;
      x_[level] = x;
      if (level == 0) {
        if (c == budget) found_.push_back(x_);
      } else {
        descend(level - 1, budget - c);
      }
      return true;
    };
    // The admissible set is an interval around the center; walk outward both ways.
    const Integer start = floor_of(center + Rational(1, 2));
    visit(start);
    for (Integer x = start + 1; visit(x); ++x) {
    }
    for (Integer x = start - 1; visit(x); --x) {
    }
    x_[level] = 0;
  }

  std::size_t n_;
  Rational value_;
  QuadraticDecomposition dec_;
  IntVector x_;
  std::vector<IntVector> found_;
};

}  // namespace

std::vector<IntVector> enumerate_form(const IntMatrix& form, const Integer& value, EnumerationOptions options) {
  if (!certify_positive_definite(form)) throw IndefiniteRestriction("form is not positive definite");
  if (value <= 0) return {};
  std::vector<IntVector> out;
  if (options.reduce_basis && form.rows() > 1) {
    const LllResult lll = lll_reduce(form);
    for (const auto& y : FinckePohst(lll.reduced, Rational(value)).run()) out.push_back(combine_columns(lll.transform, y));
  } else {
    out = FinckePohst(form, Rational(value)).run();
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Integer> certify_negative_definite(const IntMatrix& basis, const GramLattice& lat) {
  const IntMatrix negated = -restricted_gram(basis, lat);
  auto minors = certify_positive_definite(negated);
  if (!minors) throw IndefiniteRestriction("restricted form is not negative definite");
  return *minors;
}

std::vector<IntVector> enumerate_norm(const IntMatrix& basis, const GramLattice& lat, const Integer& target,
                                      EnumerationOptions options) {
  if (target >= 0) throw std::invalid_argument("enumerate_norm requires a negative target");
  if (basis.cols() == 0) return {};
  certify_negative_definite(basis, lat);
  const IntMatrix form = -restricted_gram(basis, lat);
  std::vector<IntVector> out;
  for (const auto& coeffs : enumerate_form(form, -target, options)) out.push_back(combine_columns(basis, coeffs));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

namespace {

// Gram matrix of constant vectors; entries in the multiquadratic field.
std::vector<std::vector<MultiquadraticNumber>> plane_gram(std::span<const ScalarVector> vectors, const GramLattice& lat) {
  const std::size_t k = vectors.size();
  std::vector<std::vector<MultiquadraticNumber>> g(k, std::vector<MultiquadraticNumber>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) g[i][j] = g[j][i] = inner(vectors[i], vectors[j], lat).constant_term();
  return g;
}

}  // namespace

namespace {

MultiquadraticNumber laplace_determinant(const std::vector<std::vector<MultiquadraticNumber>>& g, std::size_t row,
                                         const std::vector<std::size_t>& cols) {
  if (cols.empty()) return MultiquadraticNumber(1);
  MultiquadraticNumber acc;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (g[row][cols[i]].is_zero()) continue;
    std::vector<std::size_t> rest = cols;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    const MultiquadraticNumber term = g[row][cols[i]] * laplace_determinant(g, row + 1, rest);
    acc = i % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

bool spans_positive_subspace(std::span<const ScalarVector> vectors, const GramLattice& lat) {
  for (const auto& v : vectors)
    if (!v.is_constant()) throw std::invalid_argument("positivity check needs constant vectors");
  const auto g = plane_gram(vectors, lat);
  // Sylvester: every leading principal minor positive. Laplace expansion avoids field inverses.
  for (std::size_t k = 1; k <= g.size(); ++k) {
    std::vector<std::size_t> cols(k);
    for (std::size_t c = 0; c < k; ++c) cols[c] = c;
    if (laplace_determinant(g, 0, cols).sign() != Sign::positive) return false;
  }
  return true;
}

RootSearchResult find_roots_orthogonal_to(std::span<const ScalarVector> vectors, const Rational& s,
                                          const GramLattice& lat, EnumerationOptions options) {
  std::vector<ScalarVector> evaluated;
  evaluated.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != lat.rank()) throw DimensionMismatch("vector length differs from lattice rank");
    evaluated.push_back(v.evaluate(s));
  }
  if (!spans_positive_subspace(evaluated, lat))
    throw NotPositivePlane("vectors at s = " + format_rational(s) + " do not span a positive definite subspace");

  RootSearchResult result;
  const KernelLattice kernel = kernel_lattice(split_constraints(evaluated, lat));
  result.kernel_rank = kernel.rank();
  result.kernel_basis = kernel.basis;
  if (kernel.rank() == 0) return result;
  result.definiteness_minors = certify_negative_definite(kernel.basis, lat);
  result.roots = enumerate_norm(kernel.basis, lat, result.target, options);

  // Independent re-check, straight from the Gram matrix and the field arithmetic.
  for (const auto& root : result.roots) {
    if (inner(root, root, lat) != result.target) throw InvariantViolation("enumerated vector is not a root");
    const ScalarVector lifted = to_scalar(root);
    for (const auto& w : evaluated)
      if (!inner(lifted, w, lat).is_zero()) throw InvariantViolation("enumerated root is not orthogonal to the plane");
  }
  if (!result.roots.empty()) {
    result.outcome = RootOutcome::witness;
    result.witness = result.roots.front();
  }
  return result;
}

}  // namespace k3lat
