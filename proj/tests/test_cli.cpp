#include "pnum/error.hpp"
#include "pnum/manifold_expr.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sys/wait.h>

using namespace pnum;
using nlohmann::json;

namespace {

struct CliRun {
  int status = -1;
  std::string out;
  json doc() const { return json::parse(out); }
};

CliRun run(const std::string& args) {
  CliRun r;
  const std::string cmd = std::string(PNUM_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST(ManifoldExpr, Parses) {
  const auto e = parse_manifold_expr("K3 * X(3,5;c) * HP2 * X(5,3;-4)");
  ASSERT_EQ(e.factors.size(), 4u);
  EXPECT_TRUE(e.is_symbolic());
  EXPECT_EQ(e.weight(), 1 + 4 + 2 + 4);
  EXPECT_EQ(e.factors[3].c, -4);
  EXPECT_FALSE(parse_manifold_expr("X(3,3;2)").is_symbolic());
}

TEST(ManifoldExpr, ErrorsNamePosition) {
  for (const char* bad : {"X(3,5;c", "Y", "K3 *", "X(3,4;2)", "X(3,5,2)", "K3 K3"}) {
    try {
      parse_manifold_expr(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::Parse);
      EXPECT_NE(std::string(e.what()).find("position"), std::string::npos) << e.what();
    }
  }
}

TEST(ManifoldExpr, EvaluatesFlags) {
  EXPECT_FALSE(evaluate(parse_manifold_expr("X(3,3;1)")).is_spin);
  EXPECT_TRUE(evaluate(parse_manifold_expr("X(3,3;2) * K3")).is_spin);
  EXPECT_FALSE(evaluate(parse_manifold_expr("X(3,3;2) * K3")).nonneg_curved);
}

TEST(FunctionalSpec, ParsesAndRoundTrips) {
  const auto f = parse_functional_spec(R"({"m": 2, "entries": {"[2]": "-2", "[1,1]": "1"}})");
  EXPECT_EQ(f.coefficients.at(Partition({2})), -2);
  EXPECT_EQ(parse_functional_spec(functional_spec_to_json(f)).coefficients, f.coefficients);
}

TEST(FunctionalSpec, ValidationNamesEntry) {
  try {
    parse_functional_spec(R"({"m": 4, "entries": {"[3]": "1"}})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Validation);
    EXPECT_NE(std::string(e.what()).find("[3]"), std::string::npos);
  }
  EXPECT_THROW(parse_functional_spec(R"({"m": 4, "entries": {"[4]": "1/0"}})"), Error);
  EXPECT_THROW(parse_functional_spec("{"), Error);
}

TEST(Cli, NumbersS) {
  const CliRun r = run("numbers \"X(3,5;c)\" --s");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.doc()["s"], "30*c^3");
}

TEST(Cli, NumbersPartitionOfK3Squared) {
  const CliRun r = run("numbers \"K3 * K3\" --partition [1,1]");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.doc()["value"], "4608");
}

TEST(Cli, NumbersNonSpinWarning) {
  const CliRun r = run("numbers \"X(3,3;1)\"");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.doc()["spin"], false);
  EXPECT_TRUE(r.doc().contains("warnings"));
}

TEST(Cli, ParseErrorExitsTwo) {
  const CliRun r = run("numbers \"X(3,5;c\"");
  EXPECT_EQ(r.status, 2);
  EXPECT_EQ(r.doc()["error"], "Parse");
  EXPECT_EQ(run("frobnicate").status, 2);
}

TEST(Cli, VerifySuites) {
  const CliRun f = run("verify formulas --max-dim 20");
  ASSERT_EQ(f.status, 0);
  EXPECT_EQ(f.doc()["failures"], 0);
  const CliRun g = run("verify genus-kernel --c 2,4,6");
  ASSERT_EQ(g.status, 0);
  EXPECT_EQ(g.doc()["pass"], true);
  const CliRun n = run("verify nok3 --m 3..5 --c 2");
  ASSERT_EQ(n.status, 0);
  EXPECT_GT(n.doc()["checks"].get<int>(), 0);
}

TEST(Cli, CorruptedHP2FailsWithCounterexample) {
  const CliRun r = run("verify genus-kernel --hp2 4,8");
  EXPECT_EQ(r.status, 1);
  bool found = false;
  const json doc = r.doc();
  for (const auto& item : doc["results"]) {
    if (!item["pass"].get<bool>()) {
      EXPECT_TRUE(item.contains("counterexample"));
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Cli, WitnessFromSpecFile) {
  const std::string path = testing::TempDir() + "s4.json";
  std::ofstream(path) << R"({"m": 4, "entries": {"[1,1,1,1]": "1", "[2,1,1]": "-4", "[2,2]": "2", "[3,1]": "4", "[4]": "-4"}})";
  const CliRun r = run("witness " + path);
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.doc()["status"], "unbounded");
  EXPECT_EQ(r.doc()["witness"], "X(3,5;c)");
  EXPECT_EQ(r.doc()["f"], "30*c^3");
  EXPECT_EQ(r.doc()["f_coefficients"]["3"], "30");
}

TEST(Cli, WitnessFactorsAndValidation) {
  const CliRun l = run("witness --functional L --m 4");
  ASSERT_EQ(l.status, 0);
  EXPECT_EQ(l.doc()["status"], "factors_through_elliptic_genus");
  const std::string path = testing::TempDir() + "bad.json";
  std::ofstream(path) << R"({"m": 4, "entries": {"[3]": "1"}})";
  const CliRun bad = run("witness " + path);
  EXPECT_EQ(bad.status, 2);
  EXPECT_NE(bad.doc()["message"].get<std::string>().find("[3]"), std::string::npos);
}

TEST(Cli, DecomposeAndEliminate) {
  const CliRun d = run("decompose \"K3 * K3\" --c 2");
  ASSERT_EQ(d.status, 0);
  ASSERT_EQ(d.doc()["terms"].size(), 1u);
  EXPECT_EQ(d.doc()["terms"][0]["coefficient"], "1");
  const CliRun e = run("eliminate \"K3 * X(3,5;c)\" --c 4");
  ASSERT_EQ(e.status, 0);
  EXPECT_EQ(e.doc()["same_numbers"], true);
  const json terms = e.doc()["terms"];
  for (const auto& t : terms) EXPECT_EQ(t["monomial"].get<std::string>().find("K3"), std::string::npos);
}

TEST(Cli, OutFile) {
  const std::string path = testing::TempDir() + "numbers.json";
  const CliRun r = run("--out " + path + " numbers HP2");
  ASSERT_EQ(r.status, 0);
  std::ifstream in(path);
  const json doc = json::parse(in);
  EXPECT_EQ(doc["numbers"]["[2]"], "7");
}
