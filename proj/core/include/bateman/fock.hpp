#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "bateman/operators.hpp"

// Truncated Fock-space matrices for one or two bosonic modes. Two-mode matrices use the
// Kronecker ordering |n1, n2> -> n1 * N + n2 (mode 1 is the slow index).

namespace bateman {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

enum class FockOpKind {
  // single mode
  Lower,
  Raise,
  Position,
  Momentum,
  /// c^2 + (c^dag)^2, the squeeze-type generator
  Squeeze,
  /// c^2 - (c^dag)^2, anti-Hermitian: its exponential is unitary
  UnitarySqueeze,
  // two modes
  Lower1,
  Lower2,
  Raise1,
  Raise2,
  A1,
  A2,
  B1,
  B2,
  Hamiltonian,
};

struct FockOpSpec {
  FockOpKind kind;
  /// Required for Hamiltonian; read as doubles.
  std::optional<ExactOscillatorParams> params;
  HamiltonianForm form = HamiltonianForm::Ladder;
};

/// Parses names such as "a", "adag", "x", "p", "X_squeeze", "A1", "B2", "H".
FockOpKind fock_kind_from_name(const std::string& name);
int fock_modes(FockOpKind kind);

struct FockOp {
  int modes = 1;
  int cutoff = 0;
  ComplexMatrix matrix;
};

/// Throws std::invalid_argument for cutoff < 2 or a Hamiltonian without parameters.
FockOp build_fock(const FockOpSpec& spec, int cutoff);
inline FockOp build_fock(FockOpKind kind, int cutoff) { return build_fock(FockOpSpec{kind, std::nullopt}, cutoff); }

/// Basis indices with total excitation below `bound` (bound <= cutoff - 2), ordered by total
/// excitation, then by n1.
std::vector<int> interior_indices(int modes, int cutoff, int bound);

/// || P_M ([X, Y] - expected * I) P_M ||_2
double commutator_residual(const FockOp& x, const FockOp& y, std::complex<double> expected, int bound);

/// || P_M (H_ladder - H_pseudo) P_M ||_2
double hamiltonian_equiv_residual(const ExactOscillatorParams& params, int cutoff, int bound);

// ---------------------------------------------------------------------------------------------
// Joint null-vector experiment

enum class LoweringFamily {
  /// {A1, A2}: no normalizable joint null vector
  Pseudo,
  /// {a1, a2}: the Fock vacuum is an exact joint null vector
  Bosonic,
};

struct NullExperimentRecord {
  int cutoff = 0;
  int interior_bound = 0;
  double sigma_min = 0.0;
  /// Second-smallest singular value.
  double sigma_next = 0.0;
  /// Fraction of the minimizer's weight on the top quarter of interior excitation levels.
  double tail_mass = 0.0;
  /// |<0,0|v>|^2 of the minimizer.
  double vacuum_overlap = 0.0;
  ComplexVector minimizer;
};

struct NullExperimentReport {
  LoweringFamily family = LoweringFamily::Pseudo;
  std::vector<NullExperimentRecord> records;
};

/// For each cutoff N, stacks the two lowering matrices restricted to the interior subspace
/// (total excitation < N - 2) and records the least singular value and its right singular vector.
NullExperimentReport joint_null_experiment(const std::vector<int>& cutoffs,
                                           LoweringFamily family = LoweringFamily::Pseudo);

/// Columns: cutoff, sigma_min, sigma_next, tail_mass, vacuum_overlap.
std::string null_experiment_csv(const NullExperimentReport& report);

}  // namespace bateman
