#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "gflab/cli.hpp"

using namespace gflab;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    out.push_back(line);
  }
  return out;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("gflab_test_" + name);
}

}  // namespace

TEST(Cli, VerifyPasses) {
  const CliRun r = run({"verify", "--claim", "thm2", "--a", "-0.5", "--families", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["claim_id"], "THM2");
  bool seen = false;
  for (const auto& c : j["c0_checks"]) {
    if (c["psi"] == "generic") {
      // psi'(0) = 1/2 for the generic test function
      EXPECT_NEAR(c["got"].get<double>(), 0.25 * 0.5, 1e-4);
      seen = true;
    }
  }
  EXPECT_TRUE(seen);
}

TEST(Cli, VerifyMikusinski) {
  const CliRun r = run({"verify", "--claim", "mik", "--p", "1", "--q", "1", "--families", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"verify", "--claim", "thm2", "--a", "2"}).code, 2);
  EXPECT_EQ(run({"verify", "--claim", "nope"}).code, 2);
  EXPECT_EQ(run({"verify", "--a", "0.5"}).code, 2);
  EXPECT_EQ(run({"verify", "--claim", "thm2", "--a", "0.3", "--psi", "odd"}).code, 2);
  EXPECT_EQ(run({"verify", "--claim", "thm2", "--a", "0.3", "--ratio", "1.2"}).code, 2);
  EXPECT_EQ(run({"verify", "--claim", "thm2", "--a", "0.3", "--s", "3"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  // The literal x_+^a form does not balance; the claim fails rather than errors.
  const CliRun bad = run({"verify", "--claim", "thm2x", "--a", "0.5", "--families", "2"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("fail"), std::string::npos);
}

TEST(Cli, VerifyIsByteIdentical) {
  const std::vector<std::string> args = {"verify", "--claim", "cor3", "--a", "0.7", "--families",
                                         "2"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, ConfigFileWithOverride) {
  const auto path = temp_file("config.json");
  {
    std::ofstream f(path);
    f << R"({"claim": "thm2", "a": 2.0, "families": 2, "psi": ["generic", "zero"]})";
  }
  // a = 2 from the file is invalid; the flag overrides it.
  EXPECT_EQ(run({"verify", "--config", path.string()}).code, 2);
  const CliRun r = run({"verify", "--config", path.string(), "--a", "0.3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["config"]["a"], 0.3);
  EXPECT_EQ(j["config_file"]["a"], 2.0);
  EXPECT_EQ(j["psis"].size(), 2u);
  {
    std::ofstream f(path);
    f << R"({"claim": "thm2", "colour": 1})";
  }
  EXPECT_EQ(run({"verify", "--config", path.string()}).code, 2);
  std::filesystem::remove(path);
}

TEST(Cli, SweepDeltaSquared) {
  const CliRun r = run({"sweep", "--combo", "dd", "--psi", "even"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 14u);
  EXPECT_EQ(rows[0], "epsilon,value,err");
  double prev = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double v = std::stod(rows[i].substr(rows[i].find(',') + 1));
    EXPECT_GT(std::abs(v), prev);
    prev = std::abs(v);
  }
}

TEST(Cli, SweepBalancedConverges) {
  const CliRun r = run({"sweep", "--claim", "thm2", "--a", "0.3", "--psi", "generic"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 14u);
  auto value = [&](std::size_t i) { return std::stod(rows[i].substr(rows[i].find(',') + 1)); };
  EXPECT_LT(std::abs(value(13) - value(12)), std::abs(value(3) - value(2)));
  EXPECT_EQ(run({"sweep", "--combo", "bogus"}).code, 2);
}

TEST(Cli, Identities) {
  const auto path = temp_file("certs.json");
  const CliRun r = run({"identities", "--max-p", "12", "--out", path.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  ASSERT_TRUE(j.is_array());
  EXPECT_GT(j.size(), 0u);
  for (const auto& c : j) {
    EXPECT_EQ(c["status"], "pass");
  }
  std::filesystem::remove(path);
}

TEST(Cli, Mollifier) {
  const CliRun plain = run({"mollifier", "--q", "0", "--s", "2", "--seed", "0", "--plain"});
  ASSERT_EQ(plain.code, 0) << plain.err;
  const auto j = nlohmann::json::parse(plain.out);
  const std::vector<std::string> want = {"15/16", "0/1", "-15/8", "0/1", "15/16"};
  EXPECT_EQ(j["coeffs"].get<std::vector<std::string>>(), want);
  EXPECT_EQ(j["l2_norm_squared"], "5/7");

  const CliRun m = run({"mollifier", "--q", "2", "--s", "8", "--seed", "3"});
  ASSERT_EQ(m.code, 0);
  const auto k = nlohmann::json::parse(m.out);
  EXPECT_EQ(k["moments"][0], "1/1");
  EXPECT_EQ(k["moments"][1], "0/1");
  EXPECT_EQ(k["moments"][2], "0/1");
  EXPECT_EQ(run({"mollifier", "--s", "1"}).code, 2);
}

TEST(Cli, ListClaims) {
  const CliRun r = run({"list-claims"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).size(), 8u);
}
