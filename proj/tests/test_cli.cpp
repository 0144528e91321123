#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "labelcor/cli.hpp"

using namespace labelcor;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "labelcor");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_csv(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

const std::string kSmall = "x1,x2,label\n0,0,a\n1,1,b\n0,1,a\n";

}  // namespace

TEST(Cli, CorReportsValueInRange) {
  const auto r = run({"cor", "-i", temp_csv("small.csv", kSmall), "--method", "pcor"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.report();
  EXPECT_EQ(j["command"], "cor");
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["p"], 2);
  EXPECT_EQ(j["K"], 2);
  EXPECT_TRUE(j.contains("seed"));
  EXPECT_TRUE(j.contains("elapsed_ms"));
  const double v = j["values"]["pcor"];
  EXPECT_GE(v, 0.0);
  EXPECT_LE(v, 1.0);
}

TEST(Cli, AllMethodsAndTableFormat) {
  const auto path = temp_csv("small.csv", kSmall);
  const auto r = run({"cor", "-i", path, "--method", "all"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.report()["values"].size(), 4u);
  const auto t = run({"--format", "table", "cor", "-i", path, "-m", "gcor,pearson"});
  ASSERT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("gcor"), std::string::npos);
  EXPECT_NE(t.out.find("pearson"), std::string::npos);
}

TEST(Cli, SingleLabelGivesZero) {
  const auto r = run({"cor", "-i", temp_csv("one.csv", "x,label\n1,k\n3,k\n2,k\n"), "-m", "all"});
  ASSERT_EQ(r.code, 0);
  for (const auto& [name, v] : r.report()["values"].items()) EXPECT_EQ(v.get<double>(), 0.0) << name;
}

TEST(Cli, ForceBruteforceAgrees) {
  const auto path = temp_csv("small.csv", kSmall);
  const double fast = run({"cor", "-i", path})
                          .report()["values"]["pcor"];
  const double brute = run({"cor", "-i", path, "--force-bruteforce"}).report()["values"]["pcor"];
  EXPECT_NEAR(fast, brute, 1e-12);
}

TEST(Cli, UsageAndDataErrors) {
  const auto path = temp_csv("small.csv", kSmall);
  auto r = run({"cor", "-i", path, "--method", "nope"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_EQ(r.report()["error"]["code"], "usage");
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"permtest", "-i", path, "--b", "10"}).code, cli::kExitUsage);
  r = run({"cor", "-i", temp_csv("bad.csv", "x1,label\n1,a\nabc,b\n")});
  EXPECT_EQ(r.code, cli::kExitData);
  EXPECT_EQ(r.report()["error"]["code"], "data");
  EXPECT_EQ(run({"cor", "-i", path, "--label-col", "missing"}).code, cli::kExitData);
}

TEST(Cli, PermtestIsReproducibleExceptTiming) {
  std::string body = "x,label\n";
  for (int i = 0; i < 30; ++i) body += std::to_string(i % 7) + "," + (i % 3 ? "a" : "b") + "\n";
  const auto path = temp_csv("perm.csv", body);
  auto a = run({"permtest", "-i", path, "--b", "199", "--seed", "5"}).report();
  auto b = run({"permtest", "-i", path, "--b", "199", "--seed", "5"}).report();
  EXPECT_EQ(a["seed"], 5);
  EXPECT_EQ(a["b"], 199);
  a.erase("elapsed_ms");
  b.erase("elapsed_ms");
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Cli, SimulateReportsTableColumns) {
  const auto r = run({"simulate", "--error", "normal", "--reps", "3", "--seed", "1", "--method", "pcor",
                      "--p", "150"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto rep = r.report()["reports"]["pcor"];
  for (const char* k : {"P1", "P2", "P10", "P20", "P100", "P_all", "MMS", "RSD"}) {
    EXPECT_TRUE(rep.contains(k)) << k;
  }
  EXPECT_EQ(r.report()["config"]["d"], 37);
}

TEST(Cli, ScreenAllMethodsOnSimulatedData) {
  const auto csv = (std::filesystem::temp_directory_path() / "gwas.csv").string();
  ASSERT_EQ(run({"simulate", "--reps", "1", "--p", "120", "--dump-csv", csv}).code, 0);
  const auto r = run({"screen", "-i", csv, "--response-col", "y", "--method", "all", "--d", "37"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = r.report();
  ASSERT_EQ(j["rankings"].size(), 4u);
  for (const auto& rk : j["rankings"]) {
    EXPECT_EQ(rk["top_d"].size(), 37u);
    EXPECT_EQ(rk["order"].size(), 120u);
  }
  EXPECT_EQ(j["mode"], "categorical_features");
}

TEST(Cli, ScreenNumericFeatures) {
  std::string body = "f1,f2,f3,label\n";
  for (int i = 0; i < 40; ++i) {
    const int y = i % 2;
    body += std::to_string((i * 7) % 11) + "," + std::to_string(y * 5 + i % 3) + "," +
            std::to_string((i * 5) % 13) + "," + (y ? "u" : "v") + "\n";
  }
  const auto r = run({"screen", "-i", temp_csv("num.csv", body), "--d", "1"});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.report()["rankings"][0]["top_d_names"][0], "f2");
}

TEST(Cli, BinaryExitCodes) {
  const std::string bin = LABELCOR_CLI_PATH;
  EXPECT_EQ(WEXITSTATUS(std::system((bin + " >/dev/null 2>&1").c_str())), 1);
  const auto path = temp_csv("small.csv", kSmall);
  EXPECT_EQ(WEXITSTATUS(std::system((bin + " cor -i " + path + " >/dev/null").c_str())), 0);
  const auto bad = temp_csv("bad2.csv", "x1,label\n1,a\nzz,b\n");
  EXPECT_EQ(WEXITSTATUS(std::system((bin + " cor -i " + bad + " >/dev/null 2>&1").c_str())), 2);
}
