#include "cli.hpp"
#include "k3lat/serialize.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace k3lat;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, CheckIsometryOnShippedPhi) {
  const Result r = run({"check-isometry", K3LAT_DATA_DIR "/phi.json"});
  EXPECT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j.at("isometry").get<bool>());
  EXPECT_TRUE(j.at("o_plus").get<bool>());
}

TEST(Cli, ShippedPhiMatchesLibrary) {
  EXPECT_EQ(matrix_from_json(parse_json_file(K3LAT_DATA_DIR "/phi.json")), phi().matrix());
}

TEST(Cli, CheckIsometryFailures) {
  const Result minus = run({"check-isometry", temp_file("minus.json", to_json(minus_identity()).dump())});
  EXPECT_EQ(minus.code, 3);
  EXPECT_FALSE(Json::parse(minus.out).at("o_plus").get<bool>());
  EXPECT_TRUE(Json::parse(minus.out).at("isometry").get<bool>());
  Json d = to_json(phi());
  d["matrix"][0][0] = 2;
  const Result bad = run({"check-isometry", temp_file("double.json", d.dump())});
  EXPECT_EQ(bad.code, 3);
  EXPECT_FALSE(Json::parse(bad.out).at("isometry").get<bool>());
  EXPECT_EQ(run({"check-isometry", temp_file("small.json", R"({"matrix":[[1]]})")}).code, 1);
  EXPECT_EQ(run({"check-isometry", temp_file("junk.json", "{not json")}).code, 1);
  EXPECT_EQ(run({"check-isometry", "/nonexistent/file.json"}).code, 1);
}

TEST(Cli, E8Roots) {
  const Result r = run({"e8-roots"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out).at("count"), 240);
  const Result listed = run({"e8-roots", "--list-witnesses"});
  EXPECT_EQ(Json::parse(listed.out).at("roots").size(), 240u);
}

TEST(Cli, VerifyPaperSymbolicOnly) {
  const Result r = run({"verify-paper", "--symbolic-only"});
  EXPECT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j.at("all_pass").get<bool>());
  EXPECT_TRUE(j.at("inclusion").at("sweep").is_null());
  EXPECT_EQ(j.at("family").at("irrational_scale"), "1/16");
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, VerifyPaperNegativeControl) {
  const Result r = run({"verify-paper", "--e-scale", "0", "--samples", "3", "--s-min", "-1", "--s-max", "1"});
  EXPECT_EQ(r.code, 3);
  EXPECT_FALSE(Json::parse(r.out).at("all_pass").get<bool>());
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, VerifyPaperSamplesOnlyWorkersAgree) {
  const std::vector<std::string> base{"verify-paper", "--samples-only", "--samples", "21", "--s-min", "-1/2", "--s-max", "3"};
  auto one = base;
  one.insert(one.end(), {"--workers", "1"});
  auto three = base;
  three.insert(three.end(), {"--workers", "3"});
  const Result a = run(one);
  const Result b = run(three);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(Json::parse(a.out).at("proof"), "samples only");
}

TEST(Cli, MalformedFlags) {
  EXPECT_EQ(run({"verify-paper", "--s-min", "0.5"}).code, 1);
  EXPECT_EQ(run({"verify-paper", "--s-min", "2", "--s-max", "1"}).code, 1);
  EXPECT_EQ(run({"verify-paper", "--samples", "0"}).code, 1);
  EXPECT_EQ(run({"verify-paper", "--symbolic-only", "--samples-only"}).code, 1);
  EXPECT_EQ(run({"verify-paper", "--workers", "0"}).code, 1);
  EXPECT_EQ(run({"no-such-command"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  const Result r = run({"verify-paper", "--s-min", "x"});
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, RootsCommand) {
  const AffineFamily fam = paper_family();
  const Json point{{"kappa", to_json(fam.kappa)}, {"w1", to_json(fam.w1)}, {"w2", to_json(fam.w2)}};
  const Result empty = run({"roots", temp_file("fam.json", point.dump()), "--s", "2/3"});
  EXPECT_EQ(empty.code, 0) << empty.err;
  EXPECT_EQ(Json::parse(empty.out).at("outcome"), "empty");

  const AffineFamily zero = paper_family(0);
  const Json control{{"kappa", to_json(zero.kappa)}, {"w1", to_json(zero.w1)}, {"w2", to_json(zero.w2)}};
  const Result wit = run({"roots", temp_file("zero.json", control.dump())});
  EXPECT_EQ(wit.code, 3);
  const Json j = Json::parse(wit.out);
  EXPECT_EQ(j.at("outcome"), "witness");
  EXPECT_EQ(j.at("count"), 480);
  EXPECT_FALSE(j.contains("roots"));

  const Json degenerate{{"vectors", Json::array({to_json(to_scalar(k3_lattice().basis_vector("u")))})}};
  EXPECT_EQ(run({"roots", temp_file("null.json", degenerate.dump())}).code, 1);
}

TEST(Cli, ScanAndJsonOut) {
  const std::string path = ::testing::TempDir() + "scan.json";
  const Result r = run({"scan", "--samples", "5", "--json-out", path});
  EXPECT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  std::stringstream file;
  file << in.rdbuf();
  EXPECT_EQ(file.str(), r.out);
  EXPECT_EQ(Json::parse(r.out).at("samples").size(), 5u);
}

TEST(Cli, Search2dSmallGrid) {
  const Result r = run({"search2d", "--a-min", "2", "--a-max", "2", "--b-min", "1", "--b-max", "2", "--samples", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j.at("experimental").get<bool>());
  EXPECT_EQ(j.at("candidates").size(), 2u);
}
