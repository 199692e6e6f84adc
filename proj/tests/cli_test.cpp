#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include <sys/wait.h>

#include "checks.hpp"
#include "config.hpp"
#include "report.hpp"

namespace {

using namespace bateman;
using namespace bateman::cli;
namespace fs = std::filesystem;

TEST(RunConfig, DefaultsValidate) { EXPECT_NO_THROW(RunConfig{}.validate()); }

TEST(RunConfig, RejectsInvalidValues) {
  auto rejects = [](auto mutate) {
    RunConfig c;
    mutate(c);
    EXPECT_THROW(c.validate(), ConfigError);
  };
  rejects([](RunConfig& c) { c.subcommand = "bogus"; });
  rejects([](RunConfig& c) { c.m = 0; });
  rejects([](RunConfig& c) { c.gamma = -1; });
  rejects([](RunConfig& c) { c.omega = 0; });
  rejects([](RunConfig& c) { c.gamma = 3; });  // overdamped for m = k = 1
  rejects([](RunConfig& c) { c.theta = std::nan(""); });
  rejects([](RunConfig& c) { c.cutoffs = {32, 16}; });
  rejects([](RunConfig& c) { c.cutoffs = {2}; });
  rejects([](RunConfig& c) { c.null_cutoffs = {4}; });
  rejects([](RunConfig& c) { c.kmax = 9; });
  rejects([](RunConfig& c) { c.tol = 0; });
  rejects([](RunConfig& c) { c.out.clear(); });
}

TEST(RunConfig, FormatNamesRoundTrip) {
  for (const auto f : {OutputFormat::Json, OutputFormat::Csv, OutputFormat::Both}) {
    EXPECT_EQ(parse_format(format_name(f)), f);
  }
  EXPECT_THROW(parse_format("xml"), ConfigError);
}

TEST(RunConfig, JsonOmitsOutputDirectory) {
  RunConfig c;
  c.out = "/some/where";
  EXPECT_FALSE(c.to_json().contains("out"));
}

TEST(Checks, FastGroupsPassWithAnchorsFromVocabulary) {
  const std::set<std::string> vocab(anchors().begin(), anchors().end());
  for (const std::string group : {"counterexample", "vacuum", "commutators", "hamiltonian", "classical"}) {
    RunConfig c;
    c.subcommand = group;
    const CheckOutput out = run_checks(c);
    ASSERT_FALSE(out.verdicts.empty()) << group;
    std::set<std::string> ids;
    for (const auto& v : out.verdicts) {
      EXPECT_TRUE(vocab.count(v.anchor)) << v.id << " -> " << v.anchor;
      EXPECT_NE(v.status, Status::Fail) << v.id << ": " << v.payload.dump();
      EXPECT_TRUE(ids.insert(v.id).second) << "duplicate id " << v.id;
    }
    EXPECT_EQ(exit_status(out), 0) << group;
  }
}

TEST(Checks, ThrowingCheckBecomesFailingVerdict) {
  RunConfig c;
  c.null_cutoffs = {6};  // rejected by validate(); the group is called directly
  CheckOutput out;
  run_vacuum(c, out);
  const auto it = std::find_if(out.verdicts.begin(), out.verdicts.end(),
                               [](const Verdict& v) { return v.id == "null-vector-sweep"; });
  ASSERT_NE(it, out.verdicts.end());
  EXPECT_EQ(it->status, Status::Fail);
  EXPECT_TRUE(it->payload.contains("error"));
  EXPECT_EQ(exit_status(out), 1);
}

TEST(Report, SummaryCountsAndDeterminism) {
  RunConfig c;
  c.subcommand = "counterexample";
  const CheckOutput out = run_checks(c);
  const auto a = report_json(c, out).dump(2);
  const auto b = report_json(c, run_checks(c)).dump(2);
  EXPECT_EQ(a, b);
  const auto j = report_json(c, out);
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["summary"]["pass"].get<int>() + j["summary"]["fail"].get<int>() +
                j["summary"]["report_only"].get<int>(),
            static_cast<int>(out.verdicts.size()));
  EXPECT_TRUE(j["summary"]["ok"].get<bool>());
}

TEST(Report, WritesSelectedFormats) {
  const fs::path dir = fs::temp_directory_path() / "bateman-cli-test-formats";
  fs::remove_all(dir);
  RunConfig c;
  c.subcommand = "classical";
  c.out = dir.string();
  c.format = OutputFormat::Csv;
  write_outputs(c, run_checks(c), 0.0);
  EXPECT_FALSE(fs::exists(dir / "report.json"));
  EXPECT_TRUE(fs::exists(dir / "trajectory.csv"));
  EXPECT_TRUE(fs::exists(dir / "run_meta.json"));
  fs::remove_all(dir);
}

#ifdef BATEMAN_CLI_PATH
int run(const std::string& args) {
  const std::string cmd = std::string("\"") + BATEMAN_CLI_PATH + "\" " + args + " > /dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

TEST(Executable, ExitStatuses) {
  const fs::path dir = fs::temp_directory_path() / "bateman-cli-test-exit";
  fs::remove_all(dir);
  EXPECT_EQ(run("counterexample --out " + dir.string()), 0);
  EXPECT_TRUE(fs::exists(dir / "report.json"));
  EXPECT_EQ(run("bogus"), 2);
  EXPECT_EQ(run("classical --gamma 3 --out " + dir.string()), 2);
  EXPECT_EQ(run("squeeze --kmax 0 --out " + dir.string()), 2);
  EXPECT_EQ(run("vacuum --format xml --out " + dir.string()), 2);
  EXPECT_EQ(run("squeeze --cutoffs 32,16 --out " + dir.string()), 2);
  fs::remove_all(dir);
}
#endif

}  // namespace
