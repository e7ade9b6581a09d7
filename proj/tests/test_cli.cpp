#include "cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = qshuffle::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args, int expected_code = 0) {
  args.insert(args.begin(), "--json");
  const Result r = run(args);
  EXPECT_EQ(r.code, expected_code) << r.err;
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(Cli, Product) {
  const Result r = run({"product", "--kind", "bsh", "z4", "z3z2z2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "z3z2z2z4 + z3z2z4z2 + z3z4z2z2 - z3z8 + z4z3z2z2 - z9z2\n");
  EXPECT_EQ(run({"product", "--kind", "qsh", "z2", "z3"}).out, "z2z3 + z3z2 + z5\n");
  const auto j = run_json({"product", "--kind", "sh", "z1", "z2"});
  EXPECT_EQ(j.at("terms").size(), 2u);
}

TEST(Cli, Psi) {
  EXPECT_EQ(run({"psi", "--f", "tanh", "z1z2z3"}).out, "z1z2z3 - 1/3*z6\n");
  EXPECT_EQ(run({"psi", "--f", "cosh", "z1"}).code, 2);
}

TEST(Cli, IdentityChecks) {
  EXPECT_EQ(run({"identity-check", "geometric", "--z", "z2+z4"}).code, 0);
  EXPECT_EQ(run({"identity-check", "exp-tanh", "--z", "z1+z3"}).code, 0);
  EXPECT_EQ(run({"identity-check", "expgeo", "--z", "z2"}).code, 0);
  EXPECT_EQ(run({"identity-check", "log-exp", "--z", "z2", "--bullet", "sh"}).code, 0);
  EXPECT_EQ(run({"identity-check", "psi-morphism", "--f", "atanh", "--max-length", "4", "--letters", "3"}).code, 0);
  EXPECT_EQ(run({"identity-check", "psi-inverse", "--f", "exp", "--max-length", "4", "--letters", "2"}).code, 0);
  EXPECT_EQ(run({"identity-check", "geometric", "--z", "z2", "--f", "atanh"}).code, 0);
  EXPECT_EQ(run({"identity-check", "geometric"}).code, 2);
  const auto j = run_json({"identity-check", "expgeo", "--z", "z2"});
  EXPECT_TRUE(j.at("pass").get<bool>());
}

TEST(Cli, Lyndon) {
  EXPECT_EQ(run({"lyndon", "count", "--letters", "2", "--n", "3"}).out, "2\n");
  EXPECT_EQ(run({"lyndon", "list", "--letters", "2", "--n", "3"}).out, "z1z1z2\nz1z2z2\n");
  EXPECT_EQ(run({"lyndon", "factor", "z2z1z2z1z1"}).out, "(z2) (z1z2) (z1) (z1)\n");
  EXPECT_EQ(run({"lyndon", "decompose", "z2z1", "--product", "bsh"}).code, 0);
  EXPECT_EQ(run({"lyndon", "count", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"lyndon", "count", "--grading", "weight", "--n", "5"}).code, 0);
  EXPECT_EQ(run({"lyndon", "explode"}).code, 2);
}

TEST(Cli, HopfCheck) {
  const Result r = run({"hopf-check", "all", "--max-length", "3", "--bound", "5"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(run({"hopf-check", "bogus"}).code, 2);
}

TEST(Cli, Blocks) {
  EXPECT_EQ(run({"blocks", "to-z", "e0e1e0e1"}).out, "z4\n");
  EXPECT_EQ(run({"blocks", "to-binary", "z3"}).out, "e0e1e0\n");
  EXPECT_EQ(run({"blocks", "to-index", "z4"}).out, "ic(z4) = -zeta(2)\n");
  EXPECT_EQ(run({"blocks", "to-index", "z3"}).out, "0 (vanishes by parity)\n");
  EXPECT_EQ(run({"blocks", "from-index", "2,1,2,1,3"}).out.find("z4z3z2z2") != std::string::npos, true);
  EXPECT_EQ(run({"blocks", "to-z", "e1e0"}).code, 2);
  EXPECT_EQ(run({"blocks", "to-binary", "z0"}).code, 2);
}

TEST(Cli, RelationsAndVerify) {
  const auto rels = run_json({"relations", "generate", "--family", "product", "--u", "z4", "--v", "z3z2z2"});
  ASSERT_EQ(rels.size(), 1u);
  EXPECT_FALSE(rels[0].at("regularized").get<bool>());

  EXPECT_EQ(run({"--N", "10000", "verify", "--family", "product", "--u", "z4", "--v", "z3z2z2"}).code, 0);
  EXPECT_EQ(run({"--N", "10000", "verify", "--family", "bowman-bradley", "--n", "1", "--k", "1"}).code, 0);
  EXPECT_EQ(run({"--N", "10000", "verify", "--family", "quasipower", "--z", "z2", "--k", "1"}).code, 0);
  EXPECT_EQ(run({"--N", "10000", "verify", "--family", "zeta", "--index", "1,2", "--minus", "3"}).code, 0);
  EXPECT_EQ(run({"--N", "10000", "verify", "--family", "zeta", "--index", "2,2,2", "--closed", "1/5040:6"}).code, 0);
  // A false closed form is a failed check, not a usage error.
  EXPECT_EQ(run({"--N", "10000", "verify", "--family", "zeta", "--index", "2,2,2", "--closed", "1/5000:6"}).code, 1);
  const auto reports = run_json({"--N", "10000", "--tol", "1e-8", "verify", "--family", "product", "--random", "5",
                                 "--max-weight", "8", "--seed", "3"});
  EXPECT_EQ(reports.size(), 5u);
}

TEST(Cli, RelationRoundTripThroughFile) {
  const Result gen = run({"--json", "relations", "generate", "--family", "refined", "--counts", "0,1"});
  ASSERT_EQ(gen.code, 0);
  const std::string path = ::testing::TempDir() + "qshuffle_rel.json";
  std::ofstream(path) << gen.out;
  EXPECT_EQ(run({"--N", "10000", "verify", "--input", "@" + path}).code, 0);
  std::remove(path.c_str());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"product", "z1"}).code, 2);
  EXPECT_EQ(run({"product", "z1+", "z2"}).code, 2);
  EXPECT_EQ(run({"--N", "5", "verify", "--family", "zeta", "--index", "2"}).code, 2);
  EXPECT_EQ(run({"--tol", "-1", "verify", "--family", "zeta", "--index", "2"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({"verify", "--family", "nope"}).code, 2);
  const Result r = run({"product", "z1 z", "z2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("position"), std::string::npos);
}
