#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bateman/field.hpp"

// Exact positive series over Q(sqrt 2): Raabe's test with a finite certificate, a comparison
// fallback against the harmonic series, and partial-sum growth fits.

namespace bateman {

struct SeriesTerms {
  std::string label;
  /// Closed form k -> a_k; must be strictly positive for k >= first_index.
  std::function<Quad(long)> term;
  /// Optional a_{k+1} from (k, a_k); when present it is used for sequential evaluation.
  std::function<Quad(long, const Quad&)> step;
  long first_index = 0;

  /// Terms a_first, ..., a_last in order.
  std::vector<Quad> terms_through(long last) const;
};

/// sqrt2 * (2k)! / (k!^2 4^k), via big-integer factorials. Throws std::invalid_argument for k < 0.
Quad term_norm2(long k);

/// The squared Fock magnitudes of the factored squeeze action, with the recurrence
/// a_{k+1} = a_k (2k+1)/(2k+2).
SeriesTerms squeeze_norm_series();

enum class SeriesVerdict { Divergent, Convergent, Inconclusive };
std::string verdict_name(SeriesVerdict verdict);

struct RaabeOptions {
  /// Allowed violation of monotonicity between consecutive ratios.
  Rational monotone_tolerance = Rational(1, 1000000000);
  /// Fall back to comparison with 1/k (k a_k nondecreasing over the last half) when the
  /// ratio test is inconclusive.
  bool comparison_fallback = false;
};

struct RaabeReport {
  std::string label;
  /// ratio_index[i] = k, ratios[i] = rho_k = k (a_k / a_{k+1} - 1)
  std::vector<long> ratio_index;
  std::vector<Quad> ratios;
  /// S_k = a_first + ... + a_k, aligned with ratio_index.
  std::vector<Quad> partial_sums;
  /// Interval around the limit of rho_k: Richardson value 2 rho_K - rho_{K/2} together with
  /// rho_K, widened by their distance.
  Quad limit_lower;
  Quad limit_upper;
  bool monotone = false;
  SeriesVerdict verdict = SeriesVerdict::Inconclusive;
  bool comparison_applied = false;
  bool comparison_divergent = false;
};

/// Throws std::invalid_argument for kmax < 10 or fewer than three ratios, and std::domain_error
/// when a term is not strictly positive.
RaabeReport raabe_test(const SeriesTerms& series, long kmax, const RaabeOptions& options = {});

/// Columns: k, rho_k, S_k (decimal renderings of exact values).
std::string raabe_csv(const RaabeReport& report);

struct GrowthReport {
  std::string label;
  std::vector<long> checkpoints;
  /// Exact sums of the first K terms.
  std::vector<Quad> partial_sums;
  /// Least-squares fit of log S_K = log c + p log K over the checkpoints.
  double exponent = 0.0;
  double log_prefactor = 0.0;
};

/// Throws std::invalid_argument unless checkpoints are strictly increasing and positive.
GrowthReport partial_sum_growth(const SeriesTerms& series, const std::vector<long>& checkpoints);

/// Smallest K (number of terms, up to max_terms) with S_K > bound, compared exactly; 0 if none.
long first_exceeding(const SeriesTerms& series, const Rational& bound, long max_terms);

}  // namespace bateman
