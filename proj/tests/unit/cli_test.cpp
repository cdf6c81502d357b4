#include "hemforce/cli.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <sstream>

#include "support/test_support.hpp"

namespace hemforce::cli {
namespace {

namespace fs = std::filesystem;
using hemforce::testing::normalize_report;
using hemforce::testing::read_file;
using hemforce::testing::TempDir;
using hemforce::testing::write_file;

const fs::path kData = HEMFORCE_DATA_DIR;
const fs::path kGolden = HEMFORCE_GOLDEN_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

/// Compares against tests/golden/<name>; HEMFORCE_UPDATE_GOLDEN=1 rewrites it.
void expect_golden(const std::string& name, const std::string& actual) {
  const fs::path path = kGolden / name;
  const std::string normalized = normalize_report(actual);
  if (std::getenv("HEMFORCE_UPDATE_GOLDEN")) {
    write_file(path, normalized);
    return;
  }
  ASSERT_TRUE(fs::exists(path)) << "missing golden " << path;
  EXPECT_EQ(normalize_report(read_file(path)), normalized) << "golden mismatch: " << name;
}

std::string data(const char* name) { return (kData / name).string(); }

class CliTest : public ::testing::Test {
 protected:
  TempDir tmp;
  std::string out_dir() const { return tmp.path().string(); }
  std::string file(const char* name) const { return read_file(tmp.path() / name); }
};

TEST_F(CliTest, AnalyzeWorkedCaseGolden) {
  const auto r = invoke({"analyze", "--config", data("paper_case.json"), "--out-dir", out_dir(),
                         "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  expect_golden("analyze_paper_case/stdout.json", r.out);
  expect_golden("analyze_paper_case/analyze_report.json", file("analyze_report.json"));
  expect_golden("analyze_paper_case/analyze_report.txt", file("analyze_report.txt"));
  expect_golden("analyze_paper_case/analyze_report.csv", file("analyze_report.csv"));

  const auto j = config::parse_json(r.out, "stdout");
  EXPECT_NEAR(j["drive"]["tangential_force_N"].get<double>(), 110.0, 110.0 * 1e-9);
  EXPECT_NEAR(j["feasibility"]["margin_N"].get<double>(), 97.53, 1e-9);
  EXPECT_TRUE(j["feasibility"]["feasible"].get<bool>());
}

TEST_F(CliTest, AnalyzeZeroTorqueIsInfeasible) {
  auto j = config::parse_json(read_file(kData / "paper_case.json"), "cfg");
  j["motor"]["torque_Nm"] = 0;
  write_file(tmp.path() / "cfg.json", j.dump());
  const auto r = invoke({"analyze", "--config", (tmp.path() / "cfg.json").string(), "--out-dir",
                         out_dir()});
  EXPECT_EQ(r.code, kExitInfeasible);
  EXPECT_NE(r.out.find("INFEASIBLE"), std::string::npos);
}

TEST_F(CliTest, AnalyzeNegativeDiameterIsInputError) {
  auto j = config::parse_json(read_file(kData / "paper_case.json"), "cfg");
  j["gear"]["reference_diameter_mm"] = -5;
  write_file(tmp.path() / "cfg.json", j.dump());
  const auto r = invoke({"analyze", "-c", (tmp.path() / "cfg.json").string(), "-o", out_dir()});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("gear.reference_diameter_mm"), std::string::npos) << r.err;
}

TEST_F(CliTest, AnalyzeUnknownKeyIsInputError) {
  auto j = config::parse_json(read_file(kData / "paper_case.json"), "cfg");
  j["fabric"]["colour"] = "navy";
  write_file(tmp.path() / "cfg.json", j.dump());
  const auto r = invoke({"analyze", "-c", (tmp.path() / "cfg.json").string(), "-o", out_dir()});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("fabric.colour"), std::string::npos) << r.err;
}

TEST_F(CliTest, AnalyzeFormats) {
  const auto text = invoke({"analyze", "-c", data("paper_case.json"), "-o", out_dir()});
  EXPECT_EQ(text.code, kExitOk);
  EXPECT_EQ(text.out, file("analyze_report.txt"));
  const auto csv = invoke({"analyze", "-c", data("paper_case.json"), "-o", out_dir(), "-f", "csv"});
  EXPECT_EQ(csv.out, file("analyze_report.csv") + "\n");
  EXPECT_EQ(csv.out.rfind("quantity,value,unit", 0), 0u);
  const auto bad = invoke({"analyze", "-c", data("paper_case.json"), "-f", "xml"});
  EXPECT_EQ(bad.code, kExitInputError);
}

TEST_F(CliTest, IngestPullRunGolden) {
  const auto r = invoke({"ingest", "--input", data("pull_run_peak.csv"), "--n", "20",
                         "--safety-factor", "1.0", "--out-dir", out_dir(), "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  expect_golden("ingest_pull_run_peak/stdout.json", r.out);
  expect_golden("ingest_pull_run_peak/ingest_resampled.csv", file("ingest_resampled.csv"));
  expect_golden("ingest_pull_run_peak/ingest_summary.txt", file("ingest_summary.txt"));

  const auto j = config::parse_json(r.out, "stdout");
  EXPECT_EQ(j["resampled"]["peak_N"].get<double>(), 13.16);
  EXPECT_EQ(j["required_force_N"].get<double>(), 13.16);
}

TEST_F(CliTest, IngestTwoSamplesKeepsEndpoints) {
  const auto r = invoke({"ingest", "-i", data("pull_run_peak.csv"), "-n", "2", "-o", out_dir(),
                         "-f", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(file("ingest_resampled.csv"), "t_s,force_N\n0,0\n9.5,12.58");
}

TEST_F(CliTest, IngestDefaultsSafetyFactor) {
  const auto r = invoke({"ingest", "-i", data("pull_run_peak.csv"), "-o", out_dir(), "-f", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = config::parse_json(r.out, "stdout");
  EXPECT_EQ(j["safety_factor"].get<double>(), 1.5);
  EXPECT_NEAR(j["required_force_N"].get<double>(), 19.74, 1e-9);
  EXPECT_EQ(j["resample_n"].get<int>(), 20);
}

TEST_F(CliTest, IngestErrors) {
  const std::string missing = (tmp.path() / "nope.csv").string();
  const auto r = invoke({"ingest", "-i", missing, "-o", out_dir()});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find(missing), std::string::npos) << r.err;

  write_file(tmp.path() / "bad.csv", "t_s,force_N\n0,0\n1,1\n2,oops\n");
  const auto bad = invoke({"ingest", "-i", (tmp.path() / "bad.csv").string(), "-o", out_dir()});
  EXPECT_EQ(bad.code, kExitInputError);
  EXPECT_NE(bad.err.find("line 4"), std::string::npos) << bad.err;

  write_file(tmp.path() / "back.csv", "t_s,force_N\n0,0\n0,1\n");
  const auto back = invoke({"ingest", "-i", (tmp.path() / "back.csv").string(), "-o", out_dir()});
  EXPECT_EQ(back.code, kExitInputError);
  EXPECT_NE(back.err.find("strictly increasing"), std::string::npos) << back.err;

  EXPECT_EQ(invoke({"ingest", "-i", data("pull_run_peak.csv"), "-n", "1", "-o", out_dir()}).code,
            kExitInputError);
  EXPECT_EQ(invoke({"ingest", "-i", data("pull_run_peak.csv"), "-s", "0.9", "-o", out_dir()}).code,
            kExitInputError);
}

TEST_F(CliTest, SizeGridGolden) {
  const auto r = invoke({"size", "--input", data("sizing_grid.json"), "--out-dir", out_dir(),
                         "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  expect_golden("size_sizing_grid/stdout.csv", r.out);
  expect_golden("size_sizing_grid/sizing_result.json", file("sizing_result.json"));
  expect_golden("size_sizing_grid/sizing_result.txt", file("sizing_result.txt"));
  EXPECT_NE(r.out.find("\n40,2.2,110,97.53,1"), std::string::npos) << r.out;
}

TEST_F(CliTest, SizeAllInfeasibleStillSucceeds) {
  write_file(tmp.path() / "req.json",
             R"({"required_force_N": 500, "diameters_mm": [40], "torques_Nm": [0, 1]})");
  const auto r = invoke({"size", "-i", (tmp.path() / "req.json").string(), "-o", out_dir()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(file("sizing_result.csv"),
            "d_mm,T_Nm,force_N,margin_N,feasible\n40,0,0,-500,0\n40,1,50,-450,0");
}

TEST_F(CliTest, SizeErrors) {
  write_file(tmp.path() / "req.json",
             R"({"required_force_N": 5, "diameters_mm": [40], "torques_Nm": []})");
  const auto r = invoke({"size", "-i", (tmp.path() / "req.json").string(), "-o", out_dir()});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("torques_Nm"), std::string::npos);
}

TEST_F(CliTest, SizeMatchesPerPairAnalyze) {
  const auto r = invoke({"size", "-i", data("sizing_grid.json"), "-o", out_dir(), "-f", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto grid = config::parse_json(r.out, "stdout");
  const auto base = config::parse_json(read_file(kData / "paper_case.json"), "cfg");
  for (const auto& row : grid["rows"]) {
    auto cfg = base;
    cfg["gear"]["reference_diameter_mm"] = row["d_mm"];
    cfg["motor"]["torque_Nm"] = row["T_Nm"];
    cfg["resistance"]["measured_N"] = grid["required_force_N"];
    write_file(tmp.path() / "pair.json", cfg.dump());
    const auto a = invoke({"analyze", "-c", (tmp.path() / "pair.json").string(), "-o",
                           (tmp.path() / "pair").string(), "-f", "json"});
    const auto report = config::parse_json(a.out, "pair");
    EXPECT_EQ(report["feasibility"]["margin_N"], row["margin_N"]);
    EXPECT_EQ(report["feasibility"]["feasible"], row["feasible"]);
    EXPECT_EQ(a.code, row["feasible"].get<bool>() ? kExitOk : kExitInfeasible);
  }
}

TEST_F(CliTest, SimulateGoldens) {
  for (const char* name : {"feed_alternating", "feed_noise", "feed_gauge_loop"}) {
    const std::string input = data((std::string(name) + ".json").c_str());
    const auto r = invoke({"simulate", "--config", input, "--out-dir", out_dir(), "--format",
                           "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const std::string dir = std::string("simulate_") + name + "/";
    expect_golden(dir + "stdout.json", r.out);
    expect_golden(dir + "feed_cycles.csv", file("feed_cycles.csv"));
    expect_golden(dir + "feed_summary.txt", file("feed_summary.txt"));
  }
}

TEST_F(CliTest, SimulateAlternatingHasFiveSlips) {
  const auto r = invoke({"simulate", "-c", data("feed_alternating.json"), "-o", out_dir(), "-f",
                         "json"});
  const auto j = config::parse_json(r.out, "stdout");
  EXPECT_EQ(j["slip_count"].get<int>(), 5);
  EXPECT_EQ(j["slip_rate"].get<double>(), 0.5);
}

TEST_F(CliTest, SimulateExtremes) {
  write_file(tmp.path() / "ok.json",
             R"({"drive_force_N": 110, "cycles": 50, "nominal_advance_mm": 3,
                 "resistance": {"model": "constant", "force_N": 12.47}})");
  write_file(tmp.path() / "slip.json",
             R"({"drive_force_N": 10, "cycles": 50, "nominal_advance_mm": 3,
                 "resistance": {"model": "constant", "force_N": 12.47}})");
  const auto ok = invoke({"simulate", "-c", (tmp.path() / "ok.json").string(), "-o", out_dir(),
                          "-f", "json"});
  EXPECT_EQ(config::parse_json(ok.out, "ok")["slip_rate"].get<double>(), 0.0);
  const auto slip = invoke({"simulate", "-c", (tmp.path() / "slip.json").string(), "-o",
                            out_dir(), "-f", "json"});
  EXPECT_EQ(config::parse_json(slip.out, "slip")["slip_rate"].get<double>(), 1.0);
  EXPECT_EQ(slip.code, kExitOk);
}

TEST_F(CliTest, SimulateIsDeterministic) {
  const auto a = invoke({"simulate", "-c", data("feed_noise.json"), "-o", out_dir(), "-f", "csv"});
  const auto b = invoke({"simulate", "-c", data("feed_noise.json"), "-o", out_dir(), "-f", "csv"});
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, OutDirFromEnvironment) {
  const fs::path env_dir = tmp.path() / "from_env";
  ::setenv(std::string(kOutDirEnv).c_str(), env_dir.c_str(), 1);
  const auto r = invoke({"simulate", "-c", data("feed_alternating.json")});
  ::unsetenv(std::string(kOutDirEnv).c_str());
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(fs::exists(env_dir / "feed_cycles.csv"));
}

TEST_F(CliTest, UsageErrorsMapToTwo) {
  EXPECT_EQ(invoke({}).code, kExitInputError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitInputError);
  EXPECT_EQ(invoke({"analyze"}).code, kExitInputError);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
  EXPECT_EQ(invoke({"--version"}).code, kExitOk);
}

TEST_F(CliTest, ReportsAreLocaleIndependent) {
  const auto r = invoke({"analyze", "-c", data("paper_case.json"), "-o", out_dir(), "-f", "csv"});
  std::locale::global(std::locale(""));  // whatever the environment offers
  const auto again =
      invoke({"analyze", "-c", data("paper_case.json"), "-o", out_dir(), "-f", "csv"});
  std::locale::global(std::locale::classic());
  EXPECT_EQ(r.out, again.out);
  EXPECT_NE(r.out.find("margin,97.53,N"), std::string::npos) << r.out;
}

int exit_status_of(const std::string& command) {
  const int raw = std::system(command.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

TEST_F(CliTest, BinaryExitCodes) {
  const std::string cli = HEMFORCE_CLI_PATH;
  const std::string quiet = " -o " + out_dir() + " >/dev/null 2>&1";
  EXPECT_EQ(exit_status_of(cli + " analyze -c " + data("paper_case.json") + quiet), 0);
  auto j = config::parse_json(read_file(kData / "paper_case.json"), "cfg");
  j["motor"]["torque_Nm"] = 0;
  write_file(tmp.path() / "zero.json", j.dump());
  EXPECT_EQ(exit_status_of(cli + " analyze -c " + (tmp.path() / "zero.json").string() + quiet), 3);
  EXPECT_EQ(exit_status_of(cli + " analyze -c " + (tmp.path() / "none.json").string() + quiet), 2);
  EXPECT_EQ(exit_status_of(cli + " bogus" + quiet), 2);
}

}  // namespace
}  // namespace hemforce::cli
