#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>
#include <string>

#include "checks.hpp"
#include "config.hpp"

namespace bateman::cli {

inline constexpr const char* kReportSchemaVersion = "1.0.0";

/// Deterministic verdict document: resolved config, verdicts and a status summary. Contains no
/// timestamps, paths or timings.
nlohmann::ordered_json report_json(const RunConfig& config, const CheckOutput& output);

/// Run metadata kept out of the verdict document.
nlohmann::ordered_json run_meta_json(const RunConfig& config, double wall_seconds);

/// 0 when no verdict failed, 1 otherwise.
int exit_status(const CheckOutput& output);

/// Writes report.json (json/both), the CSV files (csv/both) and run_meta.json under config.out.
/// Returns the written paths in a stable order.
std::vector<std::filesystem::path> write_outputs(const RunConfig& config, const CheckOutput& output,
                                                 double wall_seconds);

}  // namespace bateman::cli
