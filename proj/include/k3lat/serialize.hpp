#pragma once

#include "k3lat/affine_family.hpp"
#include "k3lat/family.hpp"
#include "k3lat/isometry.hpp"
#include "k3lat/obstruction.hpp"
#include "k3lat/root_search.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace k3lat {

using Json = nlohmann::json;

// Malformed input raises MalformedInput throughout.

Json to_json(const Integer& x);
Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);

/// {"terms": [{"primes": [..], "coef": "p/q"}, ...]}
Json to_json(const MultiquadraticNumber& x);
MultiquadraticNumber multiquadratic_from_json(const Json& j);

/// Fraction string when rational and constant, terms object when constant,
/// {"poly": [c0, c1, ...]} otherwise.
Json to_json(const ScalarPolynomial& p);
/// Accepts fraction strings, JSON integers, terms objects and {"poly": [...]}.
ScalarPolynomial coordinate_from_json(const Json& j);

Json to_json(const IntVector& v);
Json to_json(const ScalarVector& v);
/// Checks the length against `rank`.
ScalarVector vector_from_json(const Json& j, std::size_t rank);

/// {"rank": n, "gram": [[..]]}
Json to_json(const GramLattice& lat);
/// {"matrix": [[..]]}
Json to_json(const LatticeIsometry& g);
IntMatrix matrix_from_json(const Json& j);

/// {"kappa": [..], "w1": [..], "w2": [..]} or {"vectors": [[..], ...]}.
std::vector<ScalarVector> vectors_from_json(const Json& j, std::size_t rank);

Json to_json(const AffineFamily& fam);
Json to_json(const RootSearchResult& r, bool list_witnesses);
Json to_json(const ObstructionTrace& t);
Json to_json(const SampleOutcome& o);
Json to_json(const SweepSummary& s);
Json to_json(const VerificationCertificate& c);

Json parse_json_file(const std::string& path);

}  // namespace k3lat
