#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bateman/exact_linear.hpp"
#include "bateman/lin_diff_op.hpp"

// Existence tests for vacua of families of first-order operators: the Gaussian ansatz, pure
// multiplication certificates, and pairings of hyperplane delta distributions.

namespace bateman {

struct GaussianWitness {
  CoeffMatrix quad;
  std::vector<Coeff> lin;

  PolyGauss function() const { return PolyGauss::gaussian(quad, lin); }
};

struct AnsatzReport {
  bool solvable = false;
  /// Populated iff solvable. Free unknowns of an underdetermined system are set to zero.
  std::optional<GaussianWitness> witness;
  /// Irreducible contradictory subset of the coefficient equations; populated iff !solvable.
  std::vector<LinearEquation> inconsistency;
  /// Names of the unknowns S11, S12, ..., t1, ... used by LinearEquation::str.
  std::vector<std::string> unknown_names;
};

/// Substitutes exp(-1/2 x^T S x + t^T x) with unknown symmetric S and vector t into every
/// operator and solves the exact linear system "all polynomial coefficients vanish".
/// Operators must be first order with polynomial coefficients of degree <= 1.
AnsatzReport gaussian_ansatz_solve(std::span<const LinDiffOp> ops,
                                   std::span<const std::string> names = {});

/// A combination sum_j combo[j] * op_j with no derivative part, equal to multiplication by
/// `multiplier` (nonzero).
struct MultiplierCert {
  std::vector<Coeff> combo;
  Polynomial multiplier;

  LinDiffOp recompose(std::span<const LinDiffOp> ops) const;
};

/// All independent pure-multiplication combinations of the operators (empty when the
/// derivative parts are linearly independent).
std::vector<MultiplierCert> multiplier_reduction(std::span<const LinDiffOp> ops);

/// delta(n.x - c) * envelope(x). The envelope is a PolyGauss on the full coordinate space and is
/// only ever evaluated on the hyperplane.
struct DeltaDist {
  std::vector<Quad> normal;
  Quad offset;
  PolyGauss envelope;

  /// delta(x_k) with constant envelope 1 on `nvars` coordinates.
  static DeltaDist coordinate_plane(int nvars, int k);
};

struct PairingResult {
  std::complex<double> value;
  /// Difference between the last two refinements; zero when the restriction vanished exactly.
  double error_estimate = 0.0;
  /// True when the integrand restricted to the hyperplane is identically zero.
  bool exactly_zero = false;
};

/// Default absolute tolerance of the pairing quadrature.
inline constexpr double kPairingTolerance = 1e-10;

/// <dist, test> = integral over the hyperplane of conj(envelope) * test, with the surface
/// measure induced by the delta. The restriction is exact; integration is Gauss-Hermite with
/// doubling refinement. Throws QuadratureError when refinements disagree, and
/// std::invalid_argument for mismatched dimensions, a zero normal, or a non-integrable
/// restriction.
PairingResult delta_pair(const DeltaDist& dist, const PolyGauss& test,
                         double tolerance = kPairingTolerance);

struct DistributionalCheck {
  /// pairings[i][j] = <dist, adjoint(ops[i]) tests[j]>
  std::vector<std::vector<std::complex<double>>> pairings;
  double max_abs = 0.0;
  double tolerance = kPairingTolerance;
  bool passes = false;
};

/// Fixed family of `count` real test functions on `nvars` coordinates: polynomials of degree <= 2
/// times well-conditioned Gaussians with varying centres. Deterministic.
std::vector<PolyGauss> pairing_test_family(int nvars, int count = 10);

DistributionalCheck distributional_vacuum_check(std::span<const LinDiffOp> ops, const DeltaDist& dist,
                                                std::span<const PolyGauss> tests,
                                                double tolerance = kPairingTolerance);

}  // namespace bateman
