#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "bateman/field.hpp"
#include "report.hpp"

namespace {

using bateman::cli::ConfigError;
using bateman::cli::RunConfig;

constexpr int kConfigErrorStatus = 2;

struct RawFlags {
  std::string m, gamma, k_spring, omega, format;
  std::vector<int> cutoffs, null_cutoffs;
};

bateman::Rational rational_flag(const std::string& text, const char* flag) {
  try {
    return bateman::parse_rational(text);
  } catch (const std::exception& e) {
    throw ConfigError(std::string(flag) + ": " + e.what());
  }
}

void add_common_flags(CLI::App& cmd, RunConfig& config, RawFlags& raw) {
  cmd.add_option("--m", raw.m, "mass (exact rational, e.g. 1 or 3/2)");
  cmd.add_option("--gamma", raw.gamma, "friction coefficient (exact rational)");
  cmd.add_option("--k-spring", raw.k_spring, "spring constant of the classical layer (exact rational)");
  cmd.add_option("--omega", raw.omega, "oscillator frequency of the quantum Hamiltonian (exact rational)");
  cmd.add_option("--theta", config.theta, "squeeze angle");
  cmd.add_option("--cutoffs", raw.cutoffs, "squeeze truncations, comma separated")->delimiter(',');
  cmd.add_option("--null-cutoffs", raw.null_cutoffs, "null-vector sweep truncations, comma separated")->delimiter(',');
  cmd.add_option("--kmax", config.kmax, "series and coefficient range");
  cmd.add_option("--tol", config.tol, "absolute tolerance of distributional pairings");
  cmd.add_option("--out", config.out, "output directory");
  cmd.add_option("--format", raw.format, "json, csv or both");
}

void resolve(RunConfig& config, const RawFlags& raw) {
  if (!raw.m.empty()) config.m = rational_flag(raw.m, "--m");
  if (!raw.gamma.empty()) config.gamma = rational_flag(raw.gamma, "--gamma");
  if (!raw.k_spring.empty()) config.k_spring = rational_flag(raw.k_spring, "--k-spring");
  if (!raw.omega.empty()) config.omega = rational_flag(raw.omega, "--omega");
  if (!raw.cutoffs.empty()) config.cutoffs = raw.cutoffs;
  if (!raw.null_cutoffs.empty()) config.null_cutoffs = raw.null_cutoffs;
  if (!raw.format.empty()) config.format = bateman::cli::parse_format(raw.format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification reports for the Bateman dual oscillator and its pseudo-bosonic operators"};
  app.require_subcommand(1);

  RunConfig config;
  RawFlags raw;
  const std::vector<std::pair<std::string, std::string>> descriptions{
      {"counterexample", "apply the disputed vacuum's lowering operators to the oscillator ground state"},
      {"vacuum", "Gaussian ansatz, multiplier certificates, delta pairings and the null-vector sweep"},
      {"commutators", "pseudo-bosonic commutation table, symbolic and truncated"},
      {"hamiltonian", "equality of the ladder and pseudo-number forms of H"},
      {"squeeze", "factored coefficients, Raabe's test, partial sums and truncated norms"},
      {"classical", "equations of motion, damped solution and energy conservation"},
      {"all", "every check above"},
  };
  for (const auto& [name, help] : descriptions) {
    CLI::App* cmd = app.add_subcommand(name, help);
    add_common_flags(*cmd, config, raw);
    cmd->callback([&config, name = name] { config.subcommand = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigErrorStatus;
  }

  try {
    resolve(config, raw);
    config.validate();
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfigErrorStatus;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    const bateman::cli::CheckOutput output = bateman::cli::run_checks(config);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bateman::cli::write_outputs(config, output, seconds);
    for (const auto& v : output.verdicts) {
      std::cout << bateman::cli::status_name(v.status) << "\t" << v.id << "\n";
    }
    const int status = bateman::cli::exit_status(output);
    std::cout << (status == 0 ? "ok" : "FAILED") << ": reports in " << config.out << "\n";
    return status;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
