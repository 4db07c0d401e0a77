#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "pwmra_cli/cli.hpp"

namespace {

using Json = nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "pwmra");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = pwmra::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) { return (std::filesystem::path(PWMRA_TEST_TMP) / name).string(); }

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST(CliBuild, RationalFamilyHasNoRadicals) {
  const std::string path = tmp("build4.json");
  const Result r = run({"build", "--n", "4", "--family", "rational-4n", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string text = slurp(path);
  EXPECT_EQ(text.find("sqrt"), std::string::npos);
  const Json j = Json::parse(text);
  EXPECT_TRUE(j["verification"]["all_passed"].get<bool>());
  EXPECT_EQ(j["family"], "rational-4n");
}

TEST(CliBuild, GenericHasRadicals) {
  const Result r = run({"build", "--n", "5", "--family", "generic"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("sqrt"), std::string::npos);
}

TEST(CliBuild, Deterministic) {
  EXPECT_EQ(run({"build", "--n", "3"}).out, run({"build", "--n", "3"}).out);
}

TEST(CliBuild, Csv) {
  const Result r = run({"build", "--n", "3", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("matrix,shift,row,col,exact,float\n", 0), 0u);
}

TEST(CliBuild, UsageErrors) {
  EXPECT_EQ(run({"build", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"build", "--n", "6", "--family", "rational-4n"}).code, 2);
  EXPECT_EQ(run({"build", "--n", "4", "--family", "bogus"}).code, 2);
  EXPECT_EQ(run({"build", "--n", "x"}).code, 2);
  EXPECT_EQ(run({"build", "--n", "4", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(CliVerify, ExactSuitePasses) {
  const std::string path = tmp("verify.json");
  const Result r = run({"verify", "--n", "3..4", "--suite", "exact", "--out", path});
  EXPECT_EQ(r.code, 0) << r.out;
  const Json j = Json::parse(slurp(path));
  EXPECT_TRUE(j["all_passed"].get<bool>());
  bool saw_roro = false;
  for (const auto& rec : j["records"]) saw_roro = saw_roro || rec["identity"] == "roro";
  EXPECT_TRUE(saw_roro);
}

TEST(CliVerify, FourierAndHyperSuites) {
  EXPECT_EQ(run({"verify", "--n", "1..3", "--suite", "fourier", "--tolerance", "1e-9"}).code, 0);
  EXPECT_EQ(run({"verify", "--suite", "hyper", "--seed", "5"}).code, 0);
}

TEST(CliVerify, UnknownSuite) { EXPECT_EQ(run({"verify", "--suite", "bogus"}).code, 2); }

TEST(CliEval, MellinDifferencesAreZero) {
  const Result r = run({"eval", "--fn", "mellin", "--n", "2", "--m", "1", "--z", "1..5", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "argument,value,oracle,abs_difference");
  int rows = 0;
  while (std::getline(lines, line)) {
    EXPECT_EQ(line.substr(line.rfind(',') + 1), "0") << line;
    ++rows;
  }
  EXPECT_EQ(rows, 5);
}

TEST(CliEval, FourierPhiAtZero) {
  const Result r = run({"eval", "--fn", "fourier-phi", "--n", "2", "--eps", "0", "--w", "0", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j[0]["value"], "1.3333333333333333");
}

TEST(CliEval, InvalidParameters) {
  EXPECT_EQ(run({"eval", "--fn", "fourier-u", "--n", "2", "--eps", "2"}).code, 2);
  EXPECT_EQ(run({"eval", "--fn", "fourier-u", "--n", "2", "--m", "3"}).code, 2);
  EXPECT_EQ(run({"eval", "--fn", "nope", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"eval", "--n", "2"}).code, 2);
}

TEST(CliTransform, RoundTrip) {
  const Result r = run({"transform", "--n", "3", "--levels", "3", "--roundtrip"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_LE(Json::parse(r.out)["max_error"].get<double>(), 1e-10);
}

TEST(CliTransform, AnalyzeThenInverse) {
  const std::string in = tmp("stream.json");
  const std::string mid = tmp("decomp.json");
  const std::string back = tmp("back.json");
  Json s = Json::array();
  for (int k = 0; k < 8; ++k) s.push_back({0.5 * k, 1.0, -0.25 * k, 2.0});
  write(in, s.dump());
  ASSERT_EQ(run({"transform", "--n", "3", "--levels", "2", in, "--out", mid}).code, 0);
  ASSERT_EQ(run({"transform", "--n", "3", "--inverse", mid, "--out", back}).code, 0);
  const Json j = Json::parse(slurp(back));
  for (std::size_t k = 0; k < 8; ++k) {
    for (std::size_t a = 0; a < 4; ++a) {
      EXPECT_NEAR(j["coefficients"][k][a].get<double>(), s[k][a].get<double>(), 1e-12);
    }
  }
}

TEST(CliTransform, EmptyAndMalformedInput) {
  const std::string empty = tmp("empty.json");
  write(empty, "[]");
  const Result r = run({"transform", "--n", "3", empty});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Json::parse(r.out)["coarse"].empty());

  const std::string wide = tmp("wide.json");
  write(wide, "[[1, 2, 3], [4, 5, 6]]");
  EXPECT_EQ(run({"transform", "--n", "3", "--levels", "1", wide}).code, 2);

  const std::string junk = tmp("junk.json");
  write(junk, "{not json");
  EXPECT_EQ(run({"transform", "--n", "3", junk}).code, 2);
  EXPECT_EQ(run({"transform", "--n", "3", tmp("missing.json")}).code, 2);
}
