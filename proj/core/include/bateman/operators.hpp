#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bateman/lin_diff_op.hpp"

// Position-representation constructors for the Bateman oscillator operators, in units where
// hbar = 1 and m*omega = 1 inside the ladder operators, so a_k = (x_k + d_k)/sqrt2.

namespace bateman {

enum class LadderKind { Lower, Raise };

/// a_k (Lower) or a_k^dagger (Raise) acting on `nvars` coordinates; `mode` is 0-based.
LinDiffOp make_ladder(int mode, LadderKind kind, int nvars);

/// Two-mode pseudo-bosonic operators. The Abar* names are the sign branches of the
/// criticized construction, one constructor per branch:
///   Abar1Minus = (a1 - a2^dag)/sqrt2    Abar1Plus = (a1 + a2^dag)/sqrt2
///   Abar2Minus = (-a1^dag + a2)/sqrt2   Abar2Plus = (a1^dag + a2)/sqrt2
///   Abar1DdagPlus = (a1^dag + a2)/sqrt2  Abar1DdagMinus = (a1^dag - a2)/sqrt2
///   Abar2DdagPlus = (a1 + a2^dag)/sqrt2  Abar2DdagMinus = (-a1 + a2^dag)/sqrt2
enum class PseudoOp {
  A1,
  A2,
  B1,
  B2,
  Abar1Minus,
  Abar2Minus,
  Abar1Plus,
  Abar2Plus,
  Abar1DdagPlus,
  Abar1DdagMinus,
  Abar2DdagPlus,
  Abar2DdagMinus,
};

LinDiffOp make_pseudo(PseudoOp which);
std::string_view pseudo_name(PseudoOp which);
/// Inverse of pseudo_name; throws std::invalid_argument for unknown names.
PseudoOp pseudo_from_name(std::string_view name);
const std::vector<PseudoOp>& all_pseudo_ops();

/// Exact oscillator constants for the quantum Hamiltonian. omega is independent of (m, gamma):
/// it only enters as the prefactor of the free part.
struct ExactOscillatorParams {
  Rational m = 1;
  Rational omega = 1;
  Rational gamma = 0;

  /// Throws std::invalid_argument unless m > 0, omega > 0 and gamma >= 0.
  void validate() const;
};

enum class HamiltonianForm {
  /// omega(a1^dag a1 - a2^dag a2) + (i gamma / 2m)(a1 a2 - a1^dag a2^dag)
  Ladder,
  /// omega(B1 A1 - B2 A2) + (i gamma / 2m)(B1 A1 + B2 A2 + 1)
  PseudoNumber,
};

std::string_view form_name(HamiltonianForm form);

LinDiffOp hamiltonian_free(const ExactOscillatorParams& params, HamiltonianForm form);
LinDiffOp hamiltonian_interaction(const ExactOscillatorParams& params, HamiltonianForm form);
LinDiffOp hamiltonian_build(const ExactOscillatorParams& params, HamiltonianForm form);

}  // namespace bateman
