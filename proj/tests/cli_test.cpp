#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "json.hpp"
#include "maxkcut/graph.hpp"
#include "maxkcut/io.hpp"

namespace maxkcut::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("maxkcut_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    write("k3.txt", serialize_graph(complete_graph(3)));
    write("k4.txt", serialize_graph(complete_graph(4)));
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(dir_ / name) << text; }

  int run_cli(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return run(args, out_, err_);
  }

  json last_json() const { return json::parse(out_.str()); }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, SolveCompleteGraphs) {
  ASSERT_EQ(run_cli({"solve", "--graph", path("k3.txt"), "--k", "3", "--seed", "1", "--out", path("a"), "--json"}),
            kExitOk);
  EXPECT_NEAR(last_json()["objective"].get<double>(), 3.0, 1e-4);
  EXPECT_EQ(last_json()["seed"], 1);
  const json sol = read_json_file(path("a/solution.json"));
  EXPECT_NEAR(sol["objective"].get<double>(), 3.0, 1e-4);
  EXPECT_EQ(sol["k"], 3);

  ASSERT_EQ(run_cli({"solve", "--graph", path("k4.txt"), "--k", "4", "--out", path("b")}), kExitOk);
  EXPECT_NE(out_.str().find("objective 6"), std::string::npos) << out_.str();
  EXPECT_NE(out_.str().find("seed 1"), std::string::npos);
}

TEST_F(CliTest, SolveErrors) {
  EXPECT_EQ(run_cli({"solve", "--graph", path("absent.txt"), "--k", "3"}), kExitUsage);
  EXPECT_NE(err_.str().find("absent.txt"), std::string::npos);
  write("bad.txt", "3 1\n1 1 1\n");
  EXPECT_EQ(run_cli({"solve", "--graph", path("bad.txt"), "--k", "3"}), kExitUsage);
  EXPECT_NE(err_.str().find("line 2"), std::string::npos) << err_.str();
  EXPECT_EQ(run_cli({"solve", "--graph", path("k3.txt"), "--k", "1"}), kExitUsage);
  EXPECT_EQ(run_cli({"solve", "--k", "3"}), kExitUsage);
  EXPECT_EQ(run_cli({}), kExitUsage);
  EXPECT_EQ(run_cli({"--help"}), kExitOk);
}

TEST_F(CliTest, RoundSchemesOnK3) {
  ASSERT_EQ(run_cli({"solve", "--graph", path("k3.txt"), "--k", "3", "--out", path("s")}), kExitOk);
  const auto round_mean = [&](const std::string& scheme) {
    EXPECT_EQ(run_cli({"round", "--graph", path("k3.txt"), "--solution", path("s/solution.json"), "--k", "3",
                       "--scheme", scheme, "--trials", "100000", "--seed", "4", "--out", path("r_" + scheme),
                       "--json"}),
              kExitOk)
        << err_.str();
    return last_json()["mean"].get<double>();
  };
  EXPECT_NEAR(round_mean("disc"), 2.508, 0.01);
  EXPECT_NEAR(round_mean("uniform"), 2.0, 0.01);
  const double fj = round_mean("fj");
  EXPECT_GE(fj, 2.49);
  EXPECT_LE(fj, 2.52);
  const double simplex = round_mean("simplex");
  EXPECT_NEAR(simplex, 2.508, 0.015);

  const Partition best = partition_from_json(read_json_file(path("r_disc/partition.json")));
  EXPECT_EQ(best.labels.size(), 3u);
  EXPECT_EQ(best.value, 3.0);
  std::ifstream csv(path("r_disc/trials.csv"));
  std::string line;
  std::size_t rows = 0;
  std::getline(csv, line);
  EXPECT_EQ(line, "trial,value");
  while (std::getline(csv, line)) ++rows;
  EXPECT_EQ(rows, 100000u);
}

TEST_F(CliTest, RoundIsDeterministic) {
  ASSERT_EQ(run_cli({"solve", "--graph", path("k4.txt"), "--k", "4", "--out", path("s")}), kExitOk);
  std::vector<std::string> args = {"round",    "--graph", path("k4.txt"), "--solution", path("s/solution.json"),
                                   "--k",      "4",       "--trials",     "500",        "--seed",
                                   "123",      "--out",   path("r"),      "--json"};
  ASSERT_EQ(run_cli(args), kExitOk);
  const std::string first = out_.str();
  ASSERT_EQ(run_cli(args), kExitOk);
  EXPECT_EQ(out_.str(), first);
  EXPECT_EQ(last_json()["seed"], 123);
}

TEST_F(CliTest, RoundFromGram) {
  write("k3.gram", "3\n1 -0.5 -0.5\n-0.5 1 -0.5\n-0.5 -0.5 1\n");
  ASSERT_EQ(run_cli({"round", "--graph", path("k3.txt"), "--gram", path("k3.gram"), "--k", "3", "--trials", "100000",
                     "--out", path("g"), "--json"}),
            kExitOk)
      << err_.str();
  EXPECT_NEAR(last_json()["mean"].get<double>(), 2.508, 0.01);
}

TEST_F(CliTest, RoundErrors) {
  ASSERT_EQ(run_cli({"solve", "--graph", path("k3.txt"), "--k", "3", "--out", path("s")}), kExitOk);
  EXPECT_EQ(run_cli({"round", "--graph", path("k3.txt"), "--solution", path("s/solution.json"), "--k", "3",
                     "--scheme", "hyperplane"}),
            kExitUsage);
  EXPECT_NE(err_.str().find("hyperplane"), std::string::npos);
  EXPECT_EQ(run_cli({"round", "--graph", path("k3.txt"), "--solution", path("s/solution.json"), "--k", "4"}),
            kExitUsage);
  EXPECT_NE(err_.str().find("k=3"), std::string::npos) << err_.str();
  EXPECT_EQ(run_cli({"round", "--graph", path("k3.txt"), "--k", "3"}), kExitUsage);
  EXPECT_EQ(run_cli({"round", "--graph", path("k4.txt"), "--solution", path("s/solution.json"), "--k", "3"}),
            kExitUsage);
  EXPECT_EQ(run_cli({"round", "--graph", path("k3.txt"), "--solution", path("s/solution.json"), "--k", "3",
                     "--trials", "0"}),
            kExitUsage);
}

TEST_F(CliTest, RatioTable) {
  ASSERT_EQ(run_cli({"ratio-table", "--k", "3,4,5,10"}), kExitOk);
  const std::string csv = out_.str();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "k,phi_k,fj_ref,dkpw_ref,uniform_baseline");
  for (const char* value : {"3,0.836008,", "4,0.846472,", "5,0.862440,", "10,0.915885,"})
    EXPECT_NE(csv.find(value), std::string::npos) << value;

  ASSERT_EQ(run_cli({"ratio-table", "--k", "3", "--refs"}), kExitOk);
  EXPECT_NE(out_.str().find("3,0.836008,0.832718,0.836008,0.666667"), std::string::npos) << out_.str();

  ASSERT_EQ(run_cli({"ratio-table", "--k", "3,5", "--json", "--curve-points", "4", "--out", path("t")}), kExitOk);
  const json j = last_json();
  ASSERT_EQ(j.size(), 2u);
  EXPECT_NEAR(j[1]["phi_k"].get<double>(), 0.862440, 1e-6);
  EXPECT_TRUE(fs::exists(path("t/ratio_table.csv")));
  EXPECT_TRUE(fs::exists(path("t/ratio_table.json")));
  EXPECT_TRUE(fs::exists(path("t/ratio_curves.csv")));

  EXPECT_EQ(run_cli({"ratio-table", "--k", "2"}), kExitUsage);
  EXPECT_NE(err_.str().find("k >= 3"), std::string::npos) << err_.str();
  EXPECT_EQ(run_cli({"ratio-table", "--k", "3", "--format", "xml"}), kExitUsage);
}

TEST_F(CliTest, VerifySinglePoint) {
  ASSERT_EQ(run_cli({"verify", "--r", "0.5", "--delta", "1.5708", "--samples", "1000000", "--json"}), kExitOk)
      << out_.str();
  const json check = last_json()["checks"][0];
  EXPECT_TRUE(check["passed"].get<bool>());
  EXPECT_EQ(check["samples"], 1000000);
  EXPECT_LT(check["statistic"].get<double>(), check["tolerance"].get<double>());
  EXPECT_EQ(run_cli({"verify", "--r", "0.5"}), kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--check", "nonsense"}), kExitUsage);
}

TEST_F(CliTest, VerifyKThreeEquivalence) {
  ASSERT_EQ(run_cli({"verify", "--check", "k3-equivalence", "--samples", "1000000", "--out", path("v")}), kExitOk)
      << out_.str();
  EXPECT_NE(out_.str().find("PASS k3-equivalence"), std::string::npos) << out_.str();
  EXPECT_EQ(out_.str().find("FAIL"), std::string::npos) << out_.str();
  EXPECT_NE(out_.str().find("seed 1"), std::string::npos);
  EXPECT_TRUE(fs::exists(path("v/verify.json")));
}

TEST_F(CliTest, VerifyFastChecks) {
  ASSERT_EQ(run_cli({"verify", "--check", "modk,worst-case", "--samples", "1000"}), kExitOk) << out_.str();
  EXPECT_NE(out_.str().find("PASS modk"), std::string::npos);
  EXPECT_NE(out_.str().find("PASS worst-case"), std::string::npos);
}

TEST_F(CliTest, Pipeline) {
  ASSERT_EQ(run_cli({"pipeline", "--graph", path("k4.txt"), "--k", "4", "--scheme", "simplex", "--trials", "2000",
                     "--seed", "9", "--out", path("p"), "--json"}),
            kExitOk)
      << err_.str();
  for (const char* name : {"solution.json", "partition.json", "trials.csv", "report.json"})
    EXPECT_TRUE(fs::exists(dir_ / "p" / name)) << name;
  const json report = read_json_file(path("p/report.json"));
  EXPECT_NEAR(report["sdp_objective"].get<double>(), 6.0, 1e-4);
  EXPECT_EQ(report["seed"], 9);
  EXPECT_EQ(report["trials"], 2000);
  EXPECT_GT(report["mean_ratio"].get<double>(), 0.8);
  EXPECT_LE(report["best_ratio"].get<double>(), 1.0 + 1e-6);
}

}  // namespace
}  // namespace maxkcut::cli
