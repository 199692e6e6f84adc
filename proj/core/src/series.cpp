#include "bateman/series.hpp"

#include <cmath>
#include <stdexcept>
#include <type_traits>

#include "bateman/csv.hpp"

namespace bateman {
namespace {

// Calls fn(k, a_k) for `count` consecutive terms starting at first_index; a bool-returning fn
// stops the scan by returning false.
template <typename Fn>
void for_each_term(const SeriesTerms& series, long count, Fn&& fn) {
  if (count <= 0) return;
  long k = series.first_index;
  Quad a = series.term(k);
  for (long i = 0; i < count; ++i, ++k) {
    if (i > 0) a = series.step ? series.step(k - 1, a) : series.term(k);
    if (a.sign() <= 0) {
      throw std::domain_error("series '" + series.label + "' has a non-positive term at k = " +
                              std::to_string(k));
    }
    if constexpr (std::is_same_v<std::invoke_result_t<Fn&, long, const Quad&>, bool>) {
      if (!fn(k, a)) return;
    } else {
      fn(k, a);
    }
  }
}

Integer factorial(long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

}  // namespace

std::vector<Quad> SeriesTerms::terms_through(long last) const {
  std::vector<Quad> out;
  for_each_term(*this, last - first_index + 1, [&](long, const Quad& a) { out.push_back(a); });
  return out;
}

Quad term_norm2(long k) {
  if (k < 0) throw std::invalid_argument("term index must be non-negative");
  const Integer kf = factorial(k);
  Integer four_k;
  mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
  Rational q(factorial(2 * k), kf * kf * four_k);
  q.canonicalize();
  return Quad(0, q);
}

SeriesTerms squeeze_norm_series() {
  return SeriesTerms{
      "squeeze-norm2",
      [](long k) { return term_norm2(k); },
      [](long k, const Quad& a) { return a * Quad(Rational(2 * k + 1, 2 * k + 2)); },
      0,
  };
}

std::string verdict_name(SeriesVerdict verdict) {
  switch (verdict) {
    case SeriesVerdict::Divergent: return "divergent";
    case SeriesVerdict::Convergent: return "convergent";
    case SeriesVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

RaabeReport raabe_test(const SeriesTerms& series, long kmax, const RaabeOptions& options) {
  const long start = std::max(series.first_index, 1L);
  if (kmax < 10 || kmax < start + 2) {
    throw std::invalid_argument("Raabe test needs kmax >= 10 and three ratios, got kmax = " +
                                std::to_string(kmax));
  }
  RaabeReport report;
  report.label = series.label;

  Quad sum, previous;
  long previous_k = -1;
  for_each_term(series, kmax + 2 - series.first_index, [&](long k, const Quad& a) {
    if (previous_k >= start) {
      report.ratio_index.push_back(previous_k);
      report.ratios.push_back(Quad(previous_k) * (previous / a - Quad(1)));
      report.partial_sums.push_back(sum);
    }
    if (k <= kmax) sum += a;
    previous = a;
    previous_k = k;
  });

  const std::size_t last = report.ratios.size() - 1;
  const std::size_t mid = last / 2;
  const Quad& rho_hi = report.ratios[last];
  const Quad& rho_mid = report.ratios[mid];
  const Quad k_hi(report.ratio_index[last]), k_mid(report.ratio_index[mid]);
  // Eliminates the c/k term of rho_k ~ L + c/k.
  const Quad richardson = (k_hi * rho_hi - k_mid * rho_mid) / (k_hi - k_mid);
  const Quad width = (richardson - rho_hi).abs();
  report.limit_lower = std::min(richardson, rho_hi) - width;
  report.limit_upper = std::max(richardson, rho_hi) + width;

  const Quad tol(options.monotone_tolerance);
  bool increasing = true, decreasing = true;
  Quad tail_min = rho_mid, tail_max = rho_mid;
  for (std::size_t i = mid + 1; i <= last; ++i) {
    const Quad diff = report.ratios[i] - report.ratios[i - 1];
    increasing = increasing && diff >= -tol;
    decreasing = decreasing && diff <= tol;
    tail_min = std::min(tail_min, report.ratios[i]);
    tail_max = std::max(tail_max, report.ratios[i]);
  }
  report.monotone = increasing || decreasing;

  const Quad one(1);
  if (report.monotone && report.limit_upper < one && tail_max < one) {
    report.verdict = SeriesVerdict::Divergent;
  } else if (report.monotone && report.limit_lower > one && tail_min > one) {
    report.verdict = SeriesVerdict::Convergent;
  }

  if (report.verdict == SeriesVerdict::Inconclusive && options.comparison_fallback) {
    report.comparison_applied = true;
    // k a_k nondecreasing means a_k >= c/k on the tail.
    const std::vector<Quad> terms = series.terms_through(kmax);
    bool nondecreasing = true;
    const long from = report.ratio_index[mid];
    for (long k = from + 1; k <= kmax; ++k) {
      const Quad cur = Quad(k) * terms[k - series.first_index];
      const Quad prev = Quad(k - 1) * terms[k - 1 - series.first_index];
      nondecreasing = nondecreasing && cur >= prev;
    }
    report.comparison_divergent = nondecreasing;
  }
  return report;
}

std::string raabe_csv(const RaabeReport& report) {
  CsvTable table({"k", "rho_k", "S_k"});
  for (std::size_t i = 0; i < report.ratios.size(); ++i) {
    table.add_row({std::to_string(report.ratio_index[i]), format_real(report.ratios[i].to_double()),
                   format_real(report.partial_sums[i].to_double())});
  }
  return table.str();
}

GrowthReport partial_sum_growth(const SeriesTerms& series, const std::vector<long>& checkpoints) {
  if (checkpoints.empty()) throw std::invalid_argument("partial_sum_growth needs checkpoints");
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] <= 0 || (i > 0 && checkpoints[i] <= checkpoints[i - 1])) {
      throw std::invalid_argument("checkpoints must be positive and strictly increasing");
    }
  }
  GrowthReport report;
  report.label = series.label;
  report.checkpoints = checkpoints;

  Quad sum;
  std::size_t next = 0;
  long count = 0;
  for_each_term(series, checkpoints.back(), [&](long, const Quad& a) {
    sum += a;
    ++count;
    if (count == checkpoints[next]) {
      report.partial_sums.push_back(sum);
      ++next;
    }
  });

  if (checkpoints.size() >= 2) {
    // Ordinary least squares on (log K, log S_K).
    const double n = static_cast<double>(checkpoints.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
      const double x = std::log(static_cast<double>(checkpoints[i]));
      const double y = static_cast<double>(std::log(report.partial_sums[i].to_long_double()));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    report.exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    report.log_prefactor = (sy - report.exponent * sx) / n;
  }
  return report;
}

long first_exceeding(const SeriesTerms& series, const Rational& bound, long max_terms) {
  const Quad limit(bound);
  Quad sum;
  long found = 0, count = 0;
  for_each_term(series, max_terms, [&](long, const Quad& a) {
    sum += a;
    ++count;
    if (sum > limit) found = count;
    return found == 0;
  });
  return found;
}

}  // namespace bateman
