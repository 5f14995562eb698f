#include "k3lat/errors.hpp"
#include "k3lat/serialize.hpp"

#include <gtest/gtest.h>

using namespace k3lat;
using MQ = MultiquadraticNumber;

TEST(SerializeScalar, MultiquadraticShape) {
  const MQ x = MQ::radical({2, 3}, Rational(1, 2)) - MQ(3);
  const Json j = to_json(x);
  EXPECT_EQ(j, Json::parse(R"({"terms":[{"primes":[],"coef":"-3"},{"primes":[2,3],"coef":"1/2"}]})"));
  EXPECT_EQ(multiquadratic_from_json(j), x);
}

TEST(SerializeScalar, CoordinateForms) {
  EXPECT_EQ(coordinate_from_json(Json("3/4")), ScalarPolynomial(MQ(Rational(3, 4))));
  EXPECT_EQ(coordinate_from_json(Json(-2)), ScalarPolynomial(MQ(-2)));
  const ScalarPolynomial p{MQ(1), MQ::sqrt_prime(5, 2)};
  EXPECT_EQ(to_json(p), Json::parse(R"({"poly":["1",{"terms":[{"primes":[5],"coef":"2"}]}]})"));
  EXPECT_EQ(coordinate_from_json(to_json(p)), p);
  EXPECT_EQ(to_json(ScalarPolynomial(MQ(Rational(-1, 3)))), Json("-1/3"));
}

TEST(SerializeScalar, RejectsMalformed) {
  EXPECT_THROW(coordinate_from_json(Json(0.5)), MalformedInput);
  EXPECT_THROW(coordinate_from_json(Json("0.5")), MalformedInput);
  EXPECT_THROW(coordinate_from_json(Json("1/0")), MalformedInput);
  EXPECT_THROW(multiquadratic_from_json(Json::parse(R"({"terms":[{"primes":[4],"coef":"1"}]})")), MalformedInput);
  EXPECT_THROW(multiquadratic_from_json(Json::parse(R"({"terms":[{"primes":[-2],"coef":"1"}]})")), MalformedInput);
  EXPECT_THROW(multiquadratic_from_json(Json::parse(R"({"terms":[{"coef":"1"}]})")), MalformedInput);
  EXPECT_THROW(integer_from_json(Json("1/2")), MalformedInput);
}

TEST(SerializeVector, RoundTripAndLength) {
  const AffineFamily fam = paper_family();
  const Json j = to_json(fam.w1);
  EXPECT_EQ(vector_from_json(j, 22), fam.w1);
  EXPECT_THROW(vector_from_json(j, 21), MalformedInput);
  EXPECT_THROW(vector_from_json(Json::object(), 22), MalformedInput);
}

TEST(SerializeVector, PointDescriptors) {
  const AffineFamily fam = paper_family();
  const Json point{{"kappa", to_json(fam.kappa)}, {"w1", to_json(fam.w1)}, {"w2", to_json(fam.w2)}};
  EXPECT_EQ(vectors_from_json(point, 22), fam.vectors());
  const Json list{{"vectors", Json::array({to_json(fam.kappa)})}};
  EXPECT_EQ(vectors_from_json(list, 22).size(), 1u);
  EXPECT_THROW(vectors_from_json(Json{{"kappa", to_json(fam.kappa)}}, 22), MalformedInput);
}

TEST(SerializeLattice, Shapes) {
  const Json h = to_json(hyperbolic_plane());
  EXPECT_EQ(h, Json::parse(R"({"rank":2,"gram":[[0,1],[1,0]]})"));
  const Json m = to_json(phi());
  EXPECT_EQ(matrix_from_json(m), phi().matrix());
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"matrix":[[1,0],[0]]})")), MalformedInput);
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"matrix":[]})")), MalformedInput);
}

TEST(SerializeIntegers, LargeValuesAsStrings) {
  const Integer big("123456789012345678901234567890");
  EXPECT_EQ(to_json(big), Json("123456789012345678901234567890"));
  EXPECT_EQ(integer_from_json(to_json(big)), big);
  EXPECT_EQ(to_json(Integer(-5)), Json(-5));
}

TEST(SerializeCertificates, RootCertificateKeys) {
  const auto v = paper_family(0).vectors();
  const RootSearchResult r = find_roots_orthogonal_to(v, Rational(0));
  const Json j = to_json(r, false);
  EXPECT_EQ(j.at("outcome"), "witness");
  EXPECT_EQ(j.at("definiteness"), "certified");
  EXPECT_EQ(j.at("count"), 480);
  EXPECT_EQ(j.at("kernel_rank"), 19);
  EXPECT_FALSE(j.contains("roots"));
  EXPECT_EQ(to_json(r, true).at("roots").size(), 480u);
}

TEST(SerializeCertificates, TraceCarriesResidual) {
  const Json t = to_json(symbolic_root_obstruction(paper_family()));
  EXPECT_TRUE(t.at("success").get<bool>());
  EXPECT_EQ(t.at("rational_parameter").at("residual").at("equation"), "2*d_v^2 + 2*d_x^2 + 2*d_z^2 = 1");
  EXPECT_EQ(t.at("irrational_parameter").at("root_classes"), 240);
}
