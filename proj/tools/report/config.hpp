#pragma once

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "bateman/field.hpp"

namespace bateman::cli {

/// Invalid configuration; maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { Json, Csv, Both };

struct RunConfig {
  std::string subcommand = "all";
  /// Quantum layer: exact rationals, m * omega = 1 inside the ladder operators.
  Rational m = 1;
  Rational gamma = Rational(1, 5);
  Rational omega = 1;
  /// Classical layer only.
  Rational k_spring = 1;
  double theta = 7.0 * 3.14159265358979323846 / 8.0;
  /// Truncations of the squeeze operator.
  std::vector<int> cutoffs = {16, 32, 64, 128};
  /// Truncations of the joint null-vector sweep.
  std::vector<int> null_cutoffs = {8, 12, 16, 20};
  long kmax = 1000;
  double tol = 1e-10;
  std::string out = "bateman-out";
  OutputFormat format = OutputFormat::Both;

  /// Throws ConfigError.
  void validate() const;
  nlohmann::ordered_json to_json() const;
};

const std::vector<std::string>& subcommands();
std::string format_name(OutputFormat format);
OutputFormat parse_format(const std::string& name);

}  // namespace bateman::cli
