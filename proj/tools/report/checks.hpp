#pragma once

#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "config.hpp"

namespace bateman::cli {

enum class Status { Pass, Fail, ReportOnly };
std::string status_name(Status status);

struct Verdict {
  std::string id;
  /// One of anchors().
  std::string anchor;
  Status status = Status::ReportOnly;
  nlohmann::ordered_json payload = nlohmann::ordered_json::object();
};

/// The fixed vocabulary of claim anchors.
const std::vector<std::string>& anchors();

struct CheckOutput {
  std::vector<Verdict> verdicts;
  /// file name -> CSV text
  std::map<std::string, std::string> csv;
};

/// Subcommand checks; each appends to `out`. A check that throws is recorded as a failing
/// verdict carrying the exception message.
void run_counterexample(const RunConfig& config, CheckOutput& out);
void run_vacuum(const RunConfig& config, CheckOutput& out);
void run_commutators(const RunConfig& config, CheckOutput& out);
void run_hamiltonian(const RunConfig& config, CheckOutput& out);
void run_squeeze(const RunConfig& config, CheckOutput& out);
void run_classical(const RunConfig& config, CheckOutput& out);

/// Dispatches on config.subcommand ("all" runs every group in the order above).
CheckOutput run_checks(const RunConfig& config);

}  // namespace bateman::cli
