#include "bateman/operators.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace bateman {
namespace {

constexpr int kTwoModes = 2;

LinDiffOp lower(int mode) { return make_ladder(mode, LadderKind::Lower, kTwoModes); }
LinDiffOp raise(int mode) { return make_ladder(mode, LadderKind::Raise, kTwoModes); }

// (s1 * op1 + s2 * op2) / sqrt2
LinDiffOp combine(int s1, const LinDiffOp& op1, int s2, const LinDiffOp& op2) {
  return Coeff::inv_sqrt2() * (Coeff(s1) * op1 + Coeff(s2) * op2);
}

constexpr std::array<std::pair<PseudoOp, std::string_view>, 12> kPseudoNames{{
    {PseudoOp::A1, "A1"},
    {PseudoOp::A2, "A2"},
    {PseudoOp::B1, "B1"},
    {PseudoOp::B2, "B2"},
    {PseudoOp::Abar1Minus, "abar1minus"},
    {PseudoOp::Abar2Minus, "abar2minus"},
    {PseudoOp::Abar1Plus, "abar1plus"},
    {PseudoOp::Abar2Plus, "abar2plus"},
    {PseudoOp::Abar1DdagPlus, "abar1ddagplus"},
    {PseudoOp::Abar1DdagMinus, "abar1ddagminus"},
    {PseudoOp::Abar2DdagPlus, "abar2ddagplus"},
    {PseudoOp::Abar2DdagMinus, "abar2ddagminus"},
}};

}  // namespace

LinDiffOp make_ladder(int mode, LadderKind kind, int nvars) {
  if (mode < 0 || mode >= nvars) {
    throw std::out_of_range("ladder mode " + std::to_string(mode) + " out of range for " +
                            std::to_string(nvars) + " variables");
  }
  const Coeff sign = kind == LadderKind::Lower ? Coeff(1) : Coeff(-1);
  return Coeff::inv_sqrt2() *
         (LinDiffOp::position(nvars, mode) + sign * LinDiffOp::derivative(nvars, mode));
}

LinDiffOp make_pseudo(PseudoOp which) {
  const LinDiffOp a1 = lower(0), a2 = lower(1), a1d = raise(0), a2d = raise(1);
  switch (which) {
    case PseudoOp::A1:
    case PseudoOp::Abar1Minus:
      return combine(1, a1, -1, a2d);
    case PseudoOp::A2:
    case PseudoOp::Abar2Minus:
      return combine(-1, a1d, 1, a2);
    case PseudoOp::B1:
    case PseudoOp::Abar1DdagPlus:
    case PseudoOp::Abar2Plus:
      return combine(1, a1d, 1, a2);
    case PseudoOp::B2:
    case PseudoOp::Abar2DdagPlus:
    case PseudoOp::Abar1Plus:
      return combine(1, a1, 1, a2d);
    case PseudoOp::Abar1DdagMinus:
      return combine(1, a1d, -1, a2);
    case PseudoOp::Abar2DdagMinus:
      return combine(-1, a1, 1, a2d);
  }
  throw std::invalid_argument("unknown pseudo-bosonic operator");
}

std::string_view pseudo_name(PseudoOp which) {
  for (const auto& [op, name] : kPseudoNames) {
    if (op == which) return name;
  }
  return "?";
}

PseudoOp pseudo_from_name(std::string_view name) {
  for (const auto& [op, n] : kPseudoNames) {
    if (n == name) return op;
  }
  throw std::invalid_argument("unknown pseudo-bosonic operator '" + std::string(name) + "'");
}

const std::vector<PseudoOp>& all_pseudo_ops() {
  static const std::vector<PseudoOp> ops = [] {
    std::vector<PseudoOp> v;
    for (const auto& [op, name] : kPseudoNames) v.push_back(op);
    return v;
  }();
  return ops;
}

void ExactOscillatorParams::validate() const {
  if (sgn(m) <= 0) throw std::invalid_argument("mass must be positive, got " + m.get_str());
  if (sgn(omega) <= 0) throw std::invalid_argument("omega must be positive, got " + omega.get_str());
  if (sgn(gamma) < 0) throw std::invalid_argument("gamma must be non-negative, got " + gamma.get_str());
}

std::string_view form_name(HamiltonianForm form) {
  return form == HamiltonianForm::Ladder ? "ladder" : "pseudo-number";
}

LinDiffOp hamiltonian_free(const ExactOscillatorParams& params, HamiltonianForm form) {
  params.validate();
  const Coeff omega(params.omega);
  if (form == HamiltonianForm::Ladder) {
    return omega * (raise(0) * lower(0) - raise(1) * lower(1));
  }
  const LinDiffOp n1 = make_pseudo(PseudoOp::B1) * make_pseudo(PseudoOp::A1);
  const LinDiffOp n2 = make_pseudo(PseudoOp::B2) * make_pseudo(PseudoOp::A2);
  return omega * (n1 - n2);
}

LinDiffOp hamiltonian_interaction(const ExactOscillatorParams& params, HamiltonianForm form) {
  params.validate();
  const Coeff strength = Coeff::i() * Coeff(Rational(params.gamma / (2 * params.m)));
  if (form == HamiltonianForm::Ladder) {
    return strength * (lower(0) * lower(1) - raise(0) * raise(1));
  }
  const LinDiffOp n1 = make_pseudo(PseudoOp::B1) * make_pseudo(PseudoOp::A1);
  const LinDiffOp n2 = make_pseudo(PseudoOp::B2) * make_pseudo(PseudoOp::A2);
  return strength * (n1 + n2 + LinDiffOp::identity(kTwoModes));
}

LinDiffOp hamiltonian_build(const ExactOscillatorParams& params, HamiltonianForm form) {
  return hamiltonian_free(params, form) + hamiltonian_interaction(params, form);
}

}  // namespace bateman
