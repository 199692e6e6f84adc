#include "report.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <stdexcept>

namespace bateman::cli {
namespace {

using json = nlohmann::ordered_json;

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << text;
  if (!f) throw std::runtime_error("failed writing " + path.string());
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

json report_json(const RunConfig& config, const CheckOutput& output) {
  int pass = 0, fail = 0, report_only = 0;
  json checks = json::array();
  for (const auto& v : output.verdicts) {
    switch (v.status) {
      case Status::Pass: ++pass; break;
      case Status::Fail: ++fail; break;
      case Status::ReportOnly: ++report_only; break;
    }
    checks.push_back({{"id", v.id}, {"anchor", v.anchor}, {"status", status_name(v.status)}, {"payload", v.payload}});
  }
  return {
      {"schema_version", kReportSchemaVersion},
      {"tool", "bateman"},
      {"config", config.to_json()},
      {"checks", checks},
      {"summary", {{"pass", pass}, {"fail", fail}, {"report_only", report_only}, {"ok", fail == 0}}},
  };
}

json run_meta_json(const RunConfig& config, double wall_seconds) {
  return {
      {"tool", "bateman"},
      {"schema_version", kReportSchemaVersion},
      {"started_utc", utc_timestamp()},
      {"wall_seconds", wall_seconds},
      {"output_directory", config.out},
  };
}

int exit_status(const CheckOutput& output) {
  for (const auto& v : output.verdicts) {
    if (v.status == Status::Fail) return 1;
  }
  return 0;
}

std::vector<std::filesystem::path> write_outputs(const RunConfig& config, const CheckOutput& output,
                                                 double wall_seconds) {
  const std::filesystem::path dir(config.out);
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  if (config.format != OutputFormat::Csv) {
    written.push_back(dir / "report.json");
    write_text(written.back(), report_json(config, output).dump(2) + "\n");
  }
  if (config.format != OutputFormat::Json) {
    for (const auto& [name, text] : output.csv) {
      written.push_back(dir / name);
      write_text(written.back(), text);
    }
  }
  written.push_back(dir / "run_meta.json");
  write_text(written.back(), run_meta_json(config, wall_seconds).dump(2) + "\n");
  return written;
}

}  // namespace bateman::cli
