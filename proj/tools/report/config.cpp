#include "config.hpp"

#include <algorithm>
#include <cmath>

namespace bateman::cli {
namespace {

constexpr int kMaxNullCutoff = 40;
constexpr int kMaxSqueezeCutoff = 512;

void require_increasing(const std::vector<int>& v, int lo, int hi, const std::string& flag) {
  if (v.empty()) throw ConfigError(flag + " must list at least one cutoff");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < lo || v[i] > hi) {
      throw ConfigError(flag + " entries must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                        "], got " + std::to_string(v[i]));
    }
    if (i > 0 && v[i] <= v[i - 1]) throw ConfigError(flag + " must be strictly increasing");
  }
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"counterexample", "vacuum",    "commutators", "hamiltonian",
                                              "squeeze",        "classical", "all"};
  return names;
}

std::string format_name(OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Both: return "both";
  }
  return "both";
}

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "both") return OutputFormat::Both;
  throw ConfigError("--format must be json, csv or both, got '" + name + "'");
}

void RunConfig::validate() const {
  if (std::find(subcommands().begin(), subcommands().end(), subcommand) == subcommands().end()) {
    throw ConfigError("unknown subcommand '" + subcommand + "'");
  }
  if (sgn(m) <= 0) throw ConfigError("--m must be positive");
  if (sgn(gamma) < 0) throw ConfigError("--gamma must be non-negative");
  if (sgn(omega) <= 0) throw ConfigError("--omega must be positive");
  if (sgn(k_spring) <= 0) throw ConfigError("--k-spring must be positive");
  // underdamped: k - gamma^2 / 4m > 0
  if (sgn(Rational(k_spring - gamma * gamma / (4 * m))) <= 0) {
    throw ConfigError("parameters are not underdamped: k - gamma^2/(4m) must be positive");
  }
  if (!std::isfinite(theta)) throw ConfigError("--theta must be finite");
  require_increasing(cutoffs, 4, kMaxSqueezeCutoff, "--cutoffs");
  require_increasing(null_cutoffs, 8, kMaxNullCutoff, "--null-cutoffs");
  if (kmax < 10) throw ConfigError("--kmax must be at least 10, got " + std::to_string(kmax));
  if (!(tol > 0) || !std::isfinite(tol)) throw ConfigError("--tol must be positive");
  if (out.empty()) throw ConfigError("--out must not be empty");
}

nlohmann::ordered_json RunConfig::to_json() const {
  return {
      {"subcommand", subcommand},
      {"m", m.get_str()},
      {"gamma", gamma.get_str()},
      {"omega", omega.get_str()},
      {"k_spring", k_spring.get_str()},
      {"theta", theta},
      {"cutoffs", cutoffs},
      {"null_cutoffs", null_cutoffs},
      {"kmax", kmax},
      {"tol", tol},
      {"format", format_name(format)},
  };
}

}  // namespace bateman::cli
