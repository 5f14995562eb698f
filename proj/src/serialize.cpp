#include "k3lat/serialize.hpp"

#include "k3lat/errors.hpp"

#include <fstream>
#include <limits>

namespace k3lat {

namespace {

Json optional_json(const std::optional<IntVector>& v) { return v ? to_json(*v) : Json(nullptr); }

Json optional_json(const std::optional<Rational>& q) { return q ? Json(format_rational(*q)) : Json(nullptr); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw MalformedInput(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_string()) {
    const Rational q = rational_from_json(j);
    if (q.get_den() != 1) throw MalformedInput("expected an integer, got " + j.get<std::string>());
    return q.get_num();
  }
  throw MalformedInput("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational(integer_from_json(j));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw MalformedInput(e.what());
    }
  }
  throw MalformedInput("expected a fraction string, got " + j.dump());
}

Json to_json(const MultiquadraticNumber& x) {
  Json terms = Json::array();
  for (const auto& [r, q] : x.terms()) terms.push_back({{"primes", r}, {"coef", format_rational(q)}});
  return {{"terms", terms}};
}

MultiquadraticNumber multiquadratic_from_json(const Json& j) {
  const Json& terms = member(j, "terms");
  if (!terms.is_array()) throw MalformedInput("\"terms\" must be an array");
  MultiquadraticNumber acc;
  for (const auto& t : terms) {
    const Json& primes = member(t, "primes");
    if (!primes.is_array()) throw MalformedInput("\"primes\" must be an array");
    Radical r;
    for (const auto& p : primes) {
      if (!p.is_number_unsigned() || p.get<std::uint64_t>() > std::numeric_limits<std::uint32_t>::max())
        throw MalformedInput("prime must be a small positive integer, got " + p.dump());
      r.push_back(p.get<std::uint32_t>());
    }
    try {
      acc += MultiquadraticNumber::radical(r, rational_from_json(member(t, "coef")));
    } catch (const MalformedInput&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw MalformedInput(e.what());
    }
  }
  return acc;
}

namespace {

Json coefficient_json(const MultiquadraticNumber& c) {
  if (c.is_rational()) return format_rational(c.rational_part());
  return to_json(c);
}

MultiquadraticNumber coefficient_from_json(const Json& j) {
  if (j.is_object()) return multiquadratic_from_json(j);
  return MultiquadraticNumber(rational_from_json(j));
}

}  // namespace

Json to_json(const ScalarPolynomial& p) {
  if (p.is_constant()) return coefficient_json(p.constant_term());
  Json poly = Json::array();
  for (const auto& c : p.coefficients()) poly.push_back(coefficient_json(c));
  return {{"poly", poly}};
}

ScalarPolynomial coordinate_from_json(const Json& j) {
  if (j.is_object() && j.contains("poly")) {
    const Json& poly = j.at("poly");
    if (!poly.is_array()) throw MalformedInput("\"poly\" must be an array");
    std::vector<MultiquadraticNumber> coeffs;
    for (const auto& c : poly) coeffs.push_back(coefficient_from_json(c));
    return ScalarPolynomial(std::move(coeffs));
  }
  return ScalarPolynomial(coefficient_from_json(j));
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v.coords) out.push_back(to_json(x));
  return out;
}

Json to_json(const ScalarVector& v) {
  Json out = Json::array();
  for (const auto& c : v.coords) out.push_back(to_json(c));
  return out;
}

ScalarVector vector_from_json(const Json& j, std::size_t rank) {
  if (!j.is_array()) throw MalformedInput("vector must be an array");
  if (j.size() != rank)
    throw MalformedInput("vector has " + std::to_string(j.size()) + " coordinates, expected " + std::to_string(rank));
  ScalarVector out(rank);
  for (std::size_t i = 0; i < rank; ++i) out[i] = coordinate_from_json(j[i]);
  return out;
}

Json to_json(const GramLattice& lat) {
  Json gram = Json::array();
  for (std::size_t i = 0; i < lat.rank(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < lat.rank(); ++j) row.push_back(to_json(lat.gram()(i, j)));
    gram.push_back(row);
  }
  return {{"rank", lat.rank()}, {"gram", gram}};
}

Json to_json(const LatticeIsometry& g) {
  Json m = Json::array();
  for (std::size_t i = 0; i < g.matrix().rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < g.matrix().cols(); ++j) row.push_back(to_json(g.matrix()(i, j)));
    m.push_back(row);
  }
  return {{"matrix", m}};
}

IntMatrix matrix_from_json(const Json& j) {
  const Json& m = member(j, "matrix");
  if (!m.is_array() || m.empty()) throw MalformedInput("\"matrix\" must be a nonempty array of rows");
  const std::size_t rows = m.size();
  if (!m[0].is_array()) throw MalformedInput("matrix rows must be arrays");
  const std::size_t cols = m[0].size();
  IntMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!m[i].is_array() || m[i].size() != cols) throw MalformedInput("matrix rows differ in length");
    for (std::size_t k = 0; k < cols; ++k) out(i, k) = integer_from_json(m[i][k]);
  }
  return out;
}

std::vector<ScalarVector> vectors_from_json(const Json& j, std::size_t rank) {
  std::vector<ScalarVector> out;
  if (j.is_object() && j.contains("vectors")) {
    const Json& list = j.at("vectors");
    if (!list.is_array() || list.empty()) throw MalformedInput("\"vectors\" must be a nonempty array");
    for (const auto& v : list) out.push_back(vector_from_json(v, rank));
    return out;
  }
  for (const char* key : {"kappa", "w1", "w2"}) out.push_back(vector_from_json(member(j, key), rank));
  return out;
}

Json to_json(const AffineFamily& fam) {
  return {{"kappa", to_json(fam.kappa)},
          {"w1", to_json(fam.w1)},
          {"w2", to_json(fam.w2)},
          {"parameter_dim", fam.parameter_dim}};
}

Json to_json(const RootSearchResult& r, bool list_witnesses) {
  Json out{{"outcome", r.outcome == RootOutcome::empty ? "empty" : "witness"},
           {"witness", optional_json(r.witness)},
           {"kernel_rank", r.kernel_rank},
           {"count", r.count()},
           {"definiteness", "certified"},
           {"target", to_json(r.target)}};
  Json minors = Json::array();
  for (const auto& m : r.definiteness_minors) minors.push_back(to_json(m));
  out["definiteness_minors"] = minors;
  if (list_witnesses) {
    Json roots = Json::array();
    for (const auto& v : r.roots) roots.push_back(to_json(v));
    out["roots"] = roots;
  }
  return out;
}

Json to_json(const ObstructionTrace& t) {
  const RationalParameterCase& rc = t.rational;
  Json rational{{"parametrization", rc.parametrization},
                {"s_dependent_terms", rc.s_dependent_terms},
                {"net_s_dependence", rc.net_s_dependence},
                {"s_terms_cancel", rc.s_terms_cancel},
                {"verdict", to_string(rc.verdict)},
                {"method", rc.method},
                {"detail", rc.detail},
                {"witness", optional_json(rc.witness)},
                {"residual", nullptr}};
  if (rc.residual) {
    Json coeffs = Json::array();
    for (const auto& [ij, c] : rc.residual->coefficients)
      coeffs.push_back({{"i", rc.residual->variables[ij.first]},
                        {"j", rc.residual->variables[ij.second]},
                        {"c", format_rational(c)}});
    rational["residual"] = {{"equation", rc.residual->to_string()},
                            {"variables", rc.residual->variables},
                            {"coefficients", coeffs},
                            {"rhs", format_rational(rc.residual->rhs)},
                            {"even_coefficients", rc.residual->even_coefficients()}};
  }
  Json irrational = nullptr;
  if (t.irrational) {
    const IrrationalParameterCase& ic = *t.irrational;
    irrational = {{"constraints", ic.constraints},
                  {"kernel_rank", ic.kernel_rank},
                  {"radical_rank", ic.radical_rank},
                  {"root_classes", ic.root_classes},
                  {"excluded_classes", ic.excluded_classes},
                  {"verdict", to_string(ic.verdict)},
                  {"detail", ic.detail},
                  {"witness", optional_json(ic.witness)}};
  }
  return {{"success", t.success},
          {"failure", t.failure},
          {"constraint_system", t.constraint_system},
          {"forced_zero", t.forced_zero},
          {"vanishing_blocks", t.vanishing_blocks},
          {"rational_parameter", rational},
          {"irrational_parameter", irrational},
          {"witness", optional_json(t.witness)}};
}

Json to_json(const SampleOutcome& o) {
  return {{"s", format_rational(o.s)},
          {"member", o.member},
          {"diagnostic", o.diagnostic},
          {"kernel_rank", o.kernel_rank},
          {"root_count", o.root_count},
          {"witness", optional_json(o.witness)}};
}

Json to_json(const SweepSummary& s) {
  Json failures = Json::array();
  for (const auto& f : s.failures) failures.push_back(to_json(f));
  return {{"points", s.points}, {"members", s.members}, {"witnesses", s.witnesses}, {"failures", failures}};
}

Json to_json(const VerificationCertificate& c) {
  const auto& eq = c.invariance.equivariance;
  const auto& rank = c.affine_integrality.rank;
  return {
      {"all_pass", c.all_pass},
      {"invariance", {{"pass", c.invariance.pass}, {"shift", optional_json(eq.shift)}, {"detail", eq.detail}}},
      {"affine_integrality",
       {{"pass", c.affine_integrality.pass},
        {"integral_rank", rank.integral_rank},
        {"dimension", rank.dimension},
        {"full_rank", rank.full_rank()},
        {"section_injective", c.affine_integrality.section_injective}}},
      {"action_properties",
       {{"pass", c.action_properties.pass},
        {"translation", optional_json(c.action_properties.translation)},
        {"criterion", "nonzero translation of the parameter line"}}},
      {"inclusion",
       {{"pass", c.inclusion.pass},
        {"symbolic", c.inclusion.symbolic ? to_json(*c.inclusion.symbolic) : Json(nullptr)},
        {"sweep", c.inclusion.sweep ? to_json(*c.inclusion.sweep) : Json(nullptr)}}}};
}

Json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw MalformedInput(path + ": " + e.what());
  }
}

}  // namespace k3lat
