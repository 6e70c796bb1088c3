#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "nse3d/cli.hpp"

using namespace nse3d;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "nse3d");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_config(const std::string& name, const std::string& text) {
  const fs::path p = fs::temp_directory_path() / ("nse3d_cli_" + name + ".ini");
  std::ofstream(p) << text;
  return p.string();
}

const char* kShear = R"([grid]
n = 12
[scheme]
k = 0.01
[initial]
kind = shear
amplitude = 1
[run]
n_steps = 20
)";

bool has(const std::string& s, const std::string& needle) {
  return s.find(needle) != std::string::npos;
}

}  // namespace

TEST(Cli, RunWritesOutputs) {
  const fs::path dir = fs::temp_directory_path() / "nse3d_cli_run";
  fs::remove_all(dir);
  const Result r = cli({"--config", write_config("shear", kShear), "run", "--out", dir.string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(has(r.out, "termination=completed"));
  EXPECT_TRUE(fs::exists(dir / "timeseries.csv"));
  EXPECT_TRUE(fs::exists(dir / "report.json"));
}

TEST(Cli, UnknownKeyExitsOne) {
  const Result r = cli({"--config", write_config("typo", "[scheme]\nviscocity = 1\n"), "run"});
  EXPECT_EQ(r.code, kExitConfig);
  EXPECT_TRUE(has(r.err, "viscocity"));
  EXPECT_TRUE(has(r.err, "line 2"));
  EXPECT_EQ(cli({"--set", "scheme.viscocity=1", "run"}).code, kExitConfig);
}

TEST(Cli, InadmissibleTimestepExitsFour) {
  const Result r = cli({"--set", "scheme.scheme=fully_implicit", "--set", "scheme.k=1.5",
                        "--set", "run.monitor=full_small", "--set", "run.n_steps=1", "run"});
  EXPECT_EQ(r.code, kExitInfeasible);
  EXPECT_TRUE(has(r.err, "dtf0"));
}

TEST(Cli, NonconvergenceExitsThree) {
  const Result r = cli({"--set", "scheme.scheme=fully_implicit", "--set", "scheme.k=1000",
                        "--set", "grid.n=16", "--set", "initial.kind=random", "--set",
                        "initial.amplitude=200", "--set", "initial.seed=21", "--set",
                        "run.n_steps=1", "run"});
  EXPECT_EQ(r.code, kExitNonconvergence);
}

TEST(Cli, BoundViolationExitsTwo) {
  const Result r = cli({"--set", "grid.n=8", "--set", "scheme.k=0.1", "--set", "constants.c0=0.01",
                        "--set", "forcing.kind=modes", "--set",
                        "forcing.mode=0 0 1 0 -0.05 0 0 0 0", "--set", "run.monitor=semi_small",
                        "--set", "run.enforce_restrictions=false", "--set", "run.n_steps=200",
                        "run"});
  EXPECT_EQ(r.code, kExitBoundViolated);
}

TEST(Cli, AdmissibleDtSemiShortHandCase) {
  const Result r = cli({"admissible-dt", "--variant", "semi_short", "--u0-h1-sq", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(has(r.out, "k_max=0.125 binding=dtf5")) << r.out;
  // the same data from a field normalised in H1, exact up to rounding of |grad u0|
  const Result f = cli({"--set", "initial.kind=random", "--set", "initial.amplitude=1",
                        "admissible-dt", "--variant", "semi_short"});
  const auto pos = f.out.find("k_max=");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_NEAR(std::stod(f.out.substr(pos + 6)), 0.125, 1e-15);
}

TEST(Cli, AdmissibleDtAtRest) {
  const Result r = cli({"--set", "constants.c0=0.5", "--set", "scheme.nu=2", "admissible-dt",
                        "--variant", "full_small"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(has(r.out, "k_max=0.25 binding=dtf0")) << r.out;
  EXPECT_TRUE(has(r.out, "dtfa,inf"));
  const Result all = cli({"admissible-dt"});
  EXPECT_TRUE(has(all.out, "variant semi_small") && has(all.out, "variant full_short"));
}

TEST(Cli, AdmissibleDtInfeasible) {
  const Result r = cli({"--set", "initial.kind=shear", "admissible-dt", "--variant", "full_small"});
  EXPECT_EQ(r.code, kExitInfeasible);
  EXPECT_TRUE(has(r.err, "hypf"));
}

TEST(Cli, Cubic) {
  Result r = cli({"cubic", "--x", "0.5", "--k", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(has(r.out, "y1=0.3660254037844386"));
  EXPECT_TRUE(has(r.out, "y2=1"));
  EXPECT_TRUE(has(r.out, "y_plus=0.7071067811865476"));
  r = cli({"cubic", "--x", "0"});
  EXPECT_TRUE(has(r.out, "degenerate"));
  r = cli({"cubic", "--x", "100", "--k", "1"});
  EXPECT_TRUE(has(r.out, "no positive roots; dtf1 violated"));
  r = cli({"cubic", "--grad-prev", "1", "--f-l2", "0.5", "--k", "0.02"});
  EXPECT_TRUE(has(r.out, "x=1.02"));
}

TEST(Cli, GronwallAndCompare) {
  Result r = cli({"gronwall", "--b", "1", "--x0", "1", "--r", "0", "--n", "10"});
  EXPECT_EQ(r.out, "envelope=0.0009765625\n");
  r = cli({"compare", "--z0", "1", "--nu", "1", "--c4", "1", "--t", "0.25"});
  EXPECT_EQ(r.out, "z(t)^2=2\n");
  r = cli({"compare", "--k", "0.01"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(has(r.out, "zeta_n <= z(t_n) on every row"));
  EXPECT_FALSE(has(r.out, ",0\n"));
}

TEST(Cli, HelpAndUnknownFlags) {
  EXPECT_EQ(cli({"--help"}).code, kExitOk);
  const Result cubic = cli({"cubic", "--help"});
  EXPECT_EQ(cubic.code, kExitOk);
  for (const char* flag : {"--x", "--grad-prev", "--f-l2", "--nu", "--k", "--c0", "--c4"}) {
    EXPECT_TRUE(has(cubic.out, flag)) << flag;
  }
  const Result sweep = cli({"sweep", "--help"});
  for (const char* flag : {"--k", "--schemes", "--threads", "--config", "--set", "--out",
                           "--deterministic"}) {
    EXPECT_TRUE(has(sweep.out, flag)) << flag;
  }
  EXPECT_TRUE(has(cli({"admissible-dt", "--help"}).out, "--variant"));
  EXPECT_TRUE(has(cli({"gronwall", "--help"}).out, "--x0"));
  EXPECT_TRUE(has(cli({"compare", "--help"}).out, "--max-rows"));
  EXPECT_EQ(cli({"run", "--bogus"}).code, kExitConfig);
  EXPECT_EQ(cli({"nosuch"}).code, kExitConfig);
  EXPECT_EQ(cli({}).code, kExitConfig);
}

TEST(Cli, SweepTable) {
  const Result r = cli({"--config", write_config("sweep", kShear), "sweep", "--k", "0.02,0.01",
                        "--schemes", "semi_implicit,fully_implicit", "--threads", "2"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(has(r.out, "0.02,semi_implicit,none,completed"));
  EXPECT_TRUE(has(r.out, "0.01,fully_implicit,none,completed"));
}

TEST(Cli, DeterministicRunsAreByteIdentical) {
  std::vector<std::string> files;
  for (const char* d : {"nse3d_cli_det_a", "nse3d_cli_det_b"}) {
    const fs::path dir = fs::temp_directory_path() / d;
    fs::remove_all(dir);
    const Result r = cli({"--config", write_config("det", kShear), "--set",
                          "initial.kind=random", "--set", "initial.amplitude=0.5", "--set",
                          "scheme.scheme=fully_implicit", "--deterministic", "--out",
                          dir.string(), "run"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    for (const char* f : {"timeseries.csv", "report.json"}) {
      std::ifstream is(dir / f, std::ios::binary);
      std::ostringstream ss;
      ss << is.rdbuf();
      files.push_back(ss.str());
    }
  }
  EXPECT_EQ(files[0], files[2]);
  EXPECT_EQ(files[1], files[3]);
}
