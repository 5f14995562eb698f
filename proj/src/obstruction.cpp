#include "k3lat/obstruction.hpp"

#include "k3lat/errors.hpp"
#include "k3lat/integer_linalg.hpp"
#include "k3lat/root_search.hpp"

#include <algorithm>
#include <sstream>

namespace k3lat {

const char* to_string(CaseVerdict v) {
  switch (v) {
    case CaseVerdict::unsolvable: return "unsolvable";
    case CaseVerdict::solvable: return "solvable";
    case CaseVerdict::undetermined: return "undetermined";
  }
  return "undetermined";
}

namespace {

using Row = std::vector<RationalPolynomial>;
using PolyMatrix = Matrix<RationalPolynomial>;

constexpr const char* kVectorNames[] = {"kappa", "w1", "w2"};

std::string variable_name(const GramLattice& lat, std::size_t i) { return "d_" + lat.label(i); }

std::string monomial_name(const Radical& r) {
  return r.empty() ? std::string("rational part") : "sqrt(" + radicand(r).get_str() + ")";
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i].front() == '-') out += " - " + terms[i].substr(1);
    else out += " + " + terms[i];
  }
  return out;
}

std::string scaled_term(const RationalPolynomial& c, const std::string& factor) {
  if (c == RationalPolynomial(1)) return factor;
  if (c == RationalPolynomial(-1)) return "-" + factor;
  const std::string text = to_string(c);
  const bool single_term =
      std::count_if(c.coefficients().begin(), c.coefficients().end(), [](const Rational& q) { return !is_zero(q); }) == 1;
  if (single_term) return text + "*" + factor;
  return "(" + text + ")*" + factor;
}

std::string format_linear(const Row& row, const GramLattice& lat) {
  std::vector<std::string> terms;
  for (std::size_t i = 0; i < row.size(); ++i)
    if (!row[i].is_zero()) terms.push_back(scaled_term(row[i], variable_name(lat, i)));
  return join_terms(terms);
}

std::string quadratic_monomial(const std::vector<std::string>& vars, std::size_t i, std::size_t j) {
  return i == j ? vars[i] + "^2" : vars[i] + "*" + vars[j];
}

RationalPolynomial monomial(const Rational& q, std::size_t degree) {
  std::vector<Rational> c(degree + 1);
  c[degree] = q;
  return RationalPolynomial(std::move(c));
}

RationalPolynomial without_constant(const RationalPolynomial& p) {
  std::vector<Rational> c = p.coefficients();
  if (!c.empty()) c[0] = 0;
  return RationalPolynomial(std::move(c));
}

struct SplitRow {
  Row row;
  std::string origin;
};

// <delta, w_j> split over the monomials of the multiquadratic field; s stays a coefficient.
std::vector<SplitRow> monomial_split(const std::vector<ScalarVector>& vectors, const GramLattice& lat) {
  std::vector<SplitRow> out;
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    const ScalarVector g = gram_times(lat, vectors[j]);
    std::map<Radical, Row> rows;
    for (std::size_t i = 0; i < lat.rank(); ++i) {
      const auto& coeffs = g[i].coefficients();
      for (std::size_t d = 0; d < coeffs.size(); ++d)
        for (const auto& [r, q] : coeffs[d].terms()) {
          auto [it, inserted] = rows.try_emplace(r, Row(lat.rank()));
          it->second[i] += monomial(q, d);
        }
    }
    for (auto& [r, row] : rows)
      out.push_back({std::move(row), std::string("<delta,") + kVectorNames[j] + "> " + monomial_name(r)});
  }
  return out;
}

struct Elimination {
  bool ok = true;
  std::string failure;
  // pivot column -> normalized row (coefficient 1 at the pivot).
  std::map<std::size_t, Row> pivots;
};

// Gauss-Jordan over Q[s] using only nonzero constant pivots, so every step stays
// valid when s is specialized to any rational value.
Elimination eliminate(const std::vector<SplitRow>& rows) {
  Elimination out;
  for (const auto& split : rows) {
    Row row = split.row;
    for (const auto& [col, prow] : out.pivots) {
      if (row[col].is_zero()) continue;
      const RationalPolynomial f = row[col];
      for (std::size_t c = 0; c < row.size(); ++c)
        if (!prow[c].is_zero()) row[c] -= f * prow[c];
    }
    std::optional<std::size_t> best;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c].is_zero() || !row[c].is_constant()) continue;
      if (!best) {
        best = c;
        continue;
      }
      const Rational a = abs(row[c].constant_term());
      const Rational b = abs(row[*best].constant_term());
      if ((a == 1 && b != 1) || (a != 1 && b != 1 && a < b)) best = c;
    }
    const bool zero_row = std::all_of(row.begin(), row.end(), [](const RationalPolynomial& p) { return p.is_zero(); });
    if (zero_row) continue;
    if (!best) {
      out.ok = false;
      out.failure = "constraint " + split.origin + " has no constant pivot after elimination";
      return out;
    }
    const RationalPolynomial inv(Rational(1) / row[*best].constant_term());
    for (auto& p : row) p *= inv;
    for (auto& [col, prow] : out.pivots) {
      if (prow[*best].is_zero()) continue;
      const RationalPolynomial f = prow[*best];
      for (std::size_t c = 0; c < prow.size(); ++c)
        if (!row[c].is_zero()) prow[c] -= f * row[c];
    }
    out.pivots.emplace(*best, std::move(row));
  }
  return out;
}

void verify_root_for_all_s(const IntVector& delta, const std::vector<ScalarVector>& vectors, const GramLattice& lat) {
  if (inner(delta, delta, lat) != -2) throw InvariantViolation("obstruction witness is not a root");
  const ScalarVector lifted = to_scalar(delta);
  for (const auto& w : vectors)
    if (!inner(lifted, w, lat).is_zero()) throw InvariantViolation("obstruction witness is not orthogonal for all s");
}

void rational_case(const std::vector<ScalarVector>& vectors, const GramLattice& lat, ObstructionTrace& trace) {
  RationalParameterCase& rc = trace.rational;
  const auto rows = monomial_split(vectors, lat);
  for (const auto& r : rows) trace.constraint_system.push_back(r.origin + ": " + format_linear(r.row, lat) + " = 0");

  const Elimination elim = eliminate(rows);
  if (!elim.ok) {
    rc.verdict = CaseVerdict::undetermined;
    rc.detail = elim.failure;
    return;
  }
  const std::size_t n = lat.rank();
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!elim.pivots.contains(c)) free_cols.push_back(c);
  const std::size_t k = free_cols.size();
  std::vector<std::string> vars;
  for (auto c : free_cols) vars.push_back(variable_name(lat, c));

  // delta = N(s) * lambda, lambda = the free coordinates of delta.
  PolyMatrix param(n, k);
  for (std::size_t idx = 0; idx < k; ++idx) param(free_cols[idx], idx) = RationalPolynomial(1);
  for (const auto& [col, prow] : elim.pivots) {
    std::vector<std::string> terms;
    for (std::size_t idx = 0; idx < k; ++idx) {
      param(col, idx) = -prow[free_cols[idx]];
      if (!param(col, idx).is_zero()) terms.push_back(scaled_term(param(col, idx), vars[idx]));
    }
    rc.parametrization.push_back(variable_name(lat, col) + " = " + join_terms(terms));
    if (terms.empty()) trace.forced_zero.push_back(lat.label(col));
  }
  std::sort(trace.forced_zero.begin(), trace.forced_zero.end(),
            [&](const std::string& a, const std::string& b) { return lat.index_of(a) < lat.index_of(b); });
  if (lat.rank() == kK3Rank && lat == k3_lattice()) {
    auto block_vanishes = [&](std::size_t offset) {
      for (std::size_t i = 0; i < 8; ++i)
        if (std::find(trace.forced_zero.begin(), trace.forced_zero.end(), lat.label(offset + i)) ==
            trace.forced_zero.end())
          return false;
      return true;
    };
    if (block_vanishes(kFirstE8Offset)) trace.vanishing_blocks.push_back("e8a");
    if (block_vanishes(kSecondE8Offset)) trace.vanishing_blocks.push_back("e8b");
  }

  // Full expansion of <delta, delta>, Gram entry by Gram entry, keeping the s-terms.
  const IntMatrix& g = lat.gram();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      if (g(a, b) == 0) continue;
      const RationalPolynomial mult(Rational(a == b ? g(a, b) : 2 * g(a, b)));
      std::vector<std::string> terms;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
          RationalPolynomial c = param(a, i) * param(b, j);
          if (i != j) c += param(a, j) * param(b, i);
          c = without_constant(mult * c);
          if (!c.is_zero()) terms.push_back(scaled_term(c, quadratic_monomial(vars, i, j)));
        }
      if (!terms.empty()) {
        std::ostringstream os;
        os << (a == b ? "" : "2*") << "G(" << lat.label(a) << "," << lat.label(b) << ")*" << variable_name(lat, a)
           << "*" << variable_name(lat, b) << " contributes " << join_terms(terms);
        rc.s_dependent_terms.push_back(os.str());
      }
    }

  const PolyMatrix gram = g.map([](const Integer& x) { return RationalPolynomial(Rational(x)); });
  const PolyMatrix restricted = param.transpose() * gram * param;
  std::vector<std::string> net;
  ResidualQuadratic residual;
  residual.variables = vars;
  RationalMatrix constant_part(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      const RationalPolynomial q = restricted(i, j) * RationalPolynomial(Rational(i == j ? 1 : 2));
      const RationalPolynomial moving = without_constant(q);
      if (!moving.is_zero()) net.push_back(scaled_term(moving, quadratic_monomial(vars, i, j)));
      constant_part(i, j) = constant_part(j, i) = restricted(i, j).constant_term();
      const Rational c = -q.constant_term() / 2;
      if (!is_zero(c)) residual.coefficients[{i, j}] = c;
    }
  rc.net_s_dependence = join_terms(net);
  rc.s_terms_cancel = net.empty();
  if (!rc.s_terms_cancel) {
    rc.verdict = CaseVerdict::undetermined;
    rc.detail = "the norm of delta keeps s-dependent terms after elimination";
    return;
  }
  rc.residual = residual;

  if (residual.even_coefficients()) {
    rc.verdict = CaseVerdict::unsolvable;
    rc.method = "parity";
    rc.detail = "left side is even for all integer values, right side is 1: even = odd";
    return;
  }

  // Enumerate lambda with lambda^T (-Q) lambda = 2 over the constant residual form.
  const Integer den = [&] {
    std::vector<Rational> all;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) all.push_back(constant_part(i, j));
    return common_denominator(all);
  }();
  IntMatrix form(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) form(i, j) = Rational(-constant_part(i, j) * den).get_num();
  if (!certify_positive_definite(form)) {
    rc.verdict = CaseVerdict::undetermined;
    rc.detail = "residual form is not definite";
    return;
  }
  const auto solutions = enumerate_form(form, 2 * den);
  rc.method = "enumeration";
  if (solutions.empty()) {
    rc.verdict = CaseVerdict::unsolvable;
    rc.detail = "exhaustive enumeration of the definite residual form finds no solution";
    return;
  }
  // Lift the first solution back to delta; a constant integer lift is a root for every s.
  const IntVector& lambda = solutions.front();
  IntVector delta(n);
  bool constant_integer = true;
  for (std::size_t a = 0; a < n && constant_integer; ++a) {
    RationalPolynomial acc;
    for (std::size_t idx = 0; idx < k; ++idx) acc += param(a, idx) * RationalPolynomial(Rational(lambda[idx]));
    const Rational c = acc.constant_term();
    if (!acc.is_constant() || c.get_den() != 1) constant_integer = false;
    else delta[a] = c.get_num();
  }
  std::ostringstream os;
  os << solutions.size() << " residual solution(s)";
  if (constant_integer) {
    verify_root_for_all_s(delta, vectors, lat);
    rc.verdict = CaseVerdict::solvable;
    rc.witness = delta;
    rc.detail = os.str() + "; the first lifts to a root orthogonal for every s";
  } else {
    rc.verdict = CaseVerdict::undetermined;
    rc.detail = os.str() + "; integrality of the lift depends on s";
  }
}

void irrational_case(const std::vector<ScalarVector>& vectors, const GramLattice& lat, ObstructionTrace& trace) {
  IrrationalParameterCase ic;
  const std::size_t n = lat.rank();
  std::vector<IntVector> forms;
  struct Mixed {
    std::string name;
    std::vector<MultiquadraticNumber> constant;
    std::vector<Rational> slope;
  };
  std::vector<Mixed> mixed;
  auto undetermined = [&](std::string why) {
    ic.verdict = CaseVerdict::undetermined;
    ic.detail = std::move(why);
    trace.irrational = std::move(ic);
  };
  auto push_form = [&](const std::vector<Rational>& row) {
    if (auto f = primitive_integer_row(row)) forms.push_back(std::move(*f));
  };

  for (std::size_t j = 0; j < vectors.size(); ++j) {
    const std::string name = kVectorNames[j];
    if (vectors[j].degree() > 1) return undetermined(name + " is not affine in s");
    ScalarVector w0(n), w1(n);
    for (std::size_t i = 0; i < n; ++i) {
      w0[i] = ScalarPolynomial(vectors[j][i].coefficient(0));
      w1[i] = ScalarPolynomial(vectors[j][i].coefficient(1));
    }
    const auto g0 = gram_times(lat, w0).coefficient(0);
    const auto g1 = gram_times(lat, w1).coefficient(0);
    std::vector<Rational> slope(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!g1[i].is_rational()) return undetermined("the s-slope of <delta," + name + "> has irrational coefficients");
      slope[i] = g1[i].rational_part();
    }
    const bool no_slope = std::all_of(slope.begin(), slope.end(), [](const Rational& q) { return is_zero(q); });
    const bool rational_constant =
        std::all_of(g0.begin(), g0.end(), [](const MultiquadraticNumber& q) { return q.is_rational(); });
    if (no_slope) {
      std::map<Radical, std::vector<Rational>> parts;
      for (std::size_t i = 0; i < n; ++i)
        for (const auto& [r, q] : g0[i].terms()) {
          auto [it, inserted] = parts.try_emplace(r, std::vector<Rational>(n));
          it->second[i] = q;
        }
      for (const auto& [r, row] : parts) push_form(row);
      ic.constraints.push_back("<delta," + name + "> has no s-term: each of its " + std::to_string(parts.size()) +
                               " monomial parts vanishes");
    } else if (rational_constant) {
      std::vector<Rational> constant(n);
      for (std::size_t i = 0; i < n; ++i) constant[i] = g0[i].rational_part();
      push_form(constant);
      push_form(slope);
      Row c_row(n), s_row(n);
      for (std::size_t i = 0; i < n; ++i) {
        c_row[i] = RationalPolynomial(constant[i]);
        s_row[i] = RationalPolynomial(slope[i]);
      }
      ic.constraints.push_back("<delta," + name + "> = r + s*l with integer r, l; s irrational forces r = " +
                               format_linear(c_row, lat) + " = 0 and l = " + format_linear(s_row, lat) + " = 0");
    } else {
      mixed.push_back({name, g0, slope});
      ic.constraints.push_back("<delta," + name + "> mixes s with irrational monomials; kept for the root classes");
    }
  }

  IntMatrix system(forms.size(), n);
  for (std::size_t r = 0; r < forms.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) system(r, c) = forms[r][c];
  const IntMatrix kernel = forms.empty() ? IntMatrix::identity(n) : integer_kernel(system);
  ic.kernel_rank = kernel.cols();
  const IntMatrix q = restricted_gram(kernel, lat);
  if (inertia(to_rational(q)).positive != 0) return undetermined("restricted form has a positive direction");

  const ColumnEchelon ce = column_echelon(q);
  const IntMatrix complement = ce.transform.column_block(0, ce.rank);
  const IntMatrix radical = kernel * ce.transform.column_block(ce.rank, q.cols() - ce.rank);
  ic.radical_rank = radical.cols();
  const IntMatrix definite = -(complement.transpose() * q * complement);
  if (!certify_positive_definite(definite)) return undetermined("restricted form modulo its radical is not definite");
  const IntMatrix lift = kernel * complement;

  for (const auto& m : mixed)
    for (std::size_t c = 0; c < radical.cols(); ++c) {
      Rational acc = 0;
      for (std::size_t i = 0; i < n; ++i) acc += m.slope[i] * radical(i, c);
      if (!is_zero(acc)) return undetermined("the s-slope of <delta," + m.name + "> varies along the radical");
    }

  const auto classes = enumerate_form(definite, 2);
  ic.root_classes = classes.size();
  for (const auto& lambda : classes) {
    const IntVector base = combine_columns(lift, lambda);
    for (const auto& m : mixed) {
      Rational slope = 0;
      for (std::size_t i = 0; i < n; ++i) slope += m.slope[i] * base[i];
      if (!is_zero(slope))
        return undetermined("a root class has nonzero s-slope in <delta," + m.name +
                            ">, so s is pinned inside the multiquadratic field");
    }
    // Every mixed equation is now s-free: split it and solve for the radical part.
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (const auto& m : mixed) {
      std::map<Radical, std::pair<std::vector<Rational>, Rational>> parts;
      for (std::size_t i = 0; i < n; ++i)
        for (const auto& [r, coef] : m.constant[i].terms()) {
          auto [it, inserted] = parts.try_emplace(r, std::vector<Rational>(radical.cols()), Rational(0));
          for (std::size_t c = 0; c < radical.cols(); ++c) it->second.first[c] += coef * radical(i, c);
          it->second.second -= coef * base[i];
        }
      for (auto& [r, part] : parts) {
        rows.push_back(std::move(part.first));
        rhs.push_back(part.second);
      }
    }
    IntMatrix a(rows.size(), radical.cols());
    IntVector b(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::vector<Rational> all = rows[r];
      all.push_back(rhs[r]);
      const Integer den = common_denominator(all);
      for (std::size_t c = 0; c < radical.cols(); ++c) a(r, c) = Rational(rows[r][c] * den).get_num();
      b[r] = Rational(rhs[r] * den).get_num();
    }
    const auto mu = solve_integer_system(a, b);
    if (!mu) {
      ++ic.excluded_classes;
      continue;
    }
    IntVector delta = base + combine_columns(radical, *mu);
    verify_root_for_all_s(delta, vectors, lat);
    ic.verdict = CaseVerdict::solvable;
    ic.witness = delta;
    ic.detail = "a root class extends to a root orthogonal for every s";
    trace.irrational = std::move(ic);
    return;
  }
  ic.verdict = CaseVerdict::unsolvable;
  std::ostringstream os;
  os << "all " << ic.root_classes << " root class(es) modulo the radical are excluded: "
     << "their monomial parts cannot vanish";
  ic.detail = os.str();
  trace.irrational = std::move(ic);
}

}  // namespace

std::string ResidualQuadratic::to_string() const {
  std::vector<std::string> terms;
  for (const auto& [ij, c] : coefficients)
    terms.push_back(scaled_term(RationalPolynomial(c), quadratic_monomial(variables, ij.first, ij.second)));
  return join_terms(terms) + " = " + format_rational(rhs);
}

bool ResidualQuadratic::even_coefficients() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](const auto& entry) {
    const Rational& c = entry.second;
    return c.get_den() == 1 && mpz_even_p(c.get_num_mpz_t());
  }) && rhs.get_den() == 1 && mpz_odd_p(rhs.get_num_mpz_t());
}

ObstructionTrace symbolic_root_obstruction(const AffineFamily& fam, const GramLattice& lat) {
  ObstructionTrace trace;
  const auto vectors = fam.vectors();
  for (const auto& v : vectors)
    if (v.size() != lat.rank()) throw DimensionMismatch("family vector length differs from lattice rank");

  rational_case(vectors, lat, trace);
  const RationalParameterCase& rc = trace.rational;
  if (rc.verdict != CaseVerdict::unsolvable) {
    trace.failure = std::string("rational s: ") + to_string(rc.verdict) + " (" + rc.detail + ")";
    if (rc.residual) trace.failure += "; residual " + rc.residual->to_string();
    trace.witness = rc.witness;
    return trace;
  }
  irrational_case(vectors, lat, trace);
  const IrrationalParameterCase& ic = *trace.irrational;
  if (ic.verdict != CaseVerdict::unsolvable) {
    trace.failure = std::string("irrational s: ") + to_string(ic.verdict) + " (" + ic.detail + ")";
    trace.witness = ic.witness;
    return trace;
  }
  trace.success = true;
  return trace;
}

}  // namespace k3lat
