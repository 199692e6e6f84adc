#pragma once

#include <string>
#include <vector>

#include "bateman/field.hpp"
#include "bateman/fock.hpp"

// The squeeze-type operator T = exp(theta (c^2 + c^dag^2)) acting on the oscillator ground state:
// the exact Fock coefficients of its factored form and the norms of finite truncations.

namespace bateman {

/// r * sqrt(n) with n >= 1 squarefree; zero is (0, 1).
struct RadicalPair {
  Rational r = 0;
  Integer n = 1;

  /// Multiplies by sqrt(m), m >= 1, keeping the radicand squarefree.
  RadicalPair& times_sqrt(const Integer& m);
  RadicalPair& operator*=(const Rational& q) {
    r *= q;
    if (sgn(r) == 0) n = 1;
    return *this;
  }
  long double to_long_double() const;
  /// "-1/2*sqrt(2)", "1", "0".
  std::string str() const;

  friend bool operator==(const RadicalPair& l, const RadicalPair& r) { return l.r == r.r && l.n == r.n; }
};

/// Writes m = s^2 * q with q squarefree; returns (s, q). Requires m >= 1.
std::pair<Integer, Integer> squarefree_split(const Integer& m);

/// Coefficients of exp(-c^dag^2 / 2)|0> on |2k>, k = 0..kmax, computed by exact iteration of
/// (c^dag)^2 on |0>. The full action carries the additional global factor 2^(1/4).
/// Throws std::invalid_argument for kmax < 1.
std::vector<RadicalPair> squeeze_factored_action(int kmax);

inline constexpr const char* kSqueezeGlobalFactor = "2^(1/4)";

struct TruncatedNormRecord {
  int cutoff = 0;
  /// ||exp(theta X_N)|0>||; may be large, finite up to N = 128 at theta = 7 pi / 8.
  long double norm = 0;
  long double log10_norm = 0;
  /// |v_2k / 2^(1/4) - c_k| / |c_k| for k <= 3 (and 2k < N); report-only.
  std::vector<double> coeff_gap;
};

/// Dense scaling-and-squaring exponential of theta * generator at each cutoff, applied to |0>.
/// The generator is shifted by its extreme eigenvalue before exponentiation so that large
/// cutoffs do not overflow. Throws std::invalid_argument for non-increasing cutoffs or a
/// two-mode generator, std::runtime_error when the result is not finite.
std::vector<TruncatedNormRecord> squeeze_truncated_norms(double theta, const std::vector<int>& cutoffs,
                                                         FockOpKind generator = FockOpKind::Squeeze);

/// Columns: cutoff, norm, log10_norm.
std::string squeeze_norms_csv(const std::vector<TruncatedNormRecord>& records);

}  // namespace bateman
