#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "azeta");
  std::ostringstream out, err;
  int code = azeta::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(AZETA_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Cli, VerifyTorusExitsZero) {
  CliResult r = run({"verify", "--input", data("a2_torus.spec")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("identities hold"), std::string::npos);
}

TEST(Cli, BadAlphaExitsTwo) {
  CliResult r = run({"verify", "--input", data("bad_alpha.spec")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("alpha is not a nontrivial weight"), std::string::npos);
}

TEST(Cli, CountsJson) {
  CliResult r = run({"counts", "--max-n", "3", "--input", data("a2_torus.spec"), "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"N\":[0,0,9]"), std::string::npos);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["counts"]["pi1"]["N"], nlohmann::json::parse("[0,0,9]"));
  EXPECT_EQ(j["invariants"]["N"], 3);
}

TEST(Cli, ZetaJsonSchema) {
  CliResult r = run({"zeta", "--input", data("c2_torus.spec"), "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  // (1 - u^2)^-4
  EXPECT_EQ(j["zeta"]["spin"]["var"], "u");
  EXPECT_EQ(j["zeta"]["spin"]["num"], nlohmann::json::parse("[1]"));
  EXPECT_EQ(j["zeta"]["spin"]["den"], nlohmann::json::parse("[1,0,-4,0,6,0,-4,0,1]"));
}

TEST(Cli, VerifyJsonAndDeterminism) {
  auto args = std::vector<std::string>{"verify", "--input", data("c2_spin_klein.spec"), "--format", "json"};
  CliResult a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  ASSERT_TRUE(j["verify"].is_array());
  for (const auto& rec : j["verify"]) {
    EXPECT_TRUE(rec.contains("id"));
    EXPECT_TRUE(rec["holds"].get<bool>());
  }
  EXPECT_TRUE(j["all_hold"].get<bool>());
}

TEST(Cli, DescribeText) {
  CliResult r = run({"describe", "--input", data("a2_klein.spec")});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("k_gamma:     3"), std::string::npos);
}

TEST(Cli, OrderTooLowExitsTwo) {
  CliResult r = run({"verify", "--input", data("c2_spin_klein.spec"), "--order", "12"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("raise order to at least"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({"verify", "--input", data("missing.spec")}).code, 2);
  EXPECT_EQ(run({"verify", "--input", data("a2_torus.spec"), "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, CorpusDeterministic) {
  auto args = std::vector<std::string>{"corpus", "--seed", "5", "--tori", "2", "--kleins-per-cell", "1", "--format", "json"};
  CliResult a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["seed"], 5);
}
