#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bateman/classical.hpp"

namespace bateman {
namespace {

const BatemanParams kShm(1, 0, 1);
const BatemanParams kDamped(1, 0.2, 1);

Trajectory unit_start_run(const BatemanParams& p, double dt = 1e-3) {
  return integrate_eom(p, from_velocities(p, {1, 1, 0, 0}), 10.0, dt);
}

TEST(BatemanParams, Validation) {
  EXPECT_NEAR(kDamped.omega2(), 1 - 0.01, 1e-15);
  EXPECT_NEAR(kDamped.coupling(), kDamped.m() * kDamped.omega2(), 1e-15);
  EXPECT_THROW(BatemanParams(0, 0, 1), std::invalid_argument);
  EXPECT_THROW(BatemanParams(1, -0.1, 1), std::invalid_argument);
  EXPECT_THROW(BatemanParams(1, 0, 0), std::invalid_argument);
  EXPECT_THROW(BatemanParams(1, 2, 1), std::invalid_argument);  // critically damped
}

TEST(PhaseState, VelocityMomentumRoundTrip) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int i = 0; i < 50; ++i) {
    const BatemanParams p(0.5 + std::fabs(u(rng)), std::fabs(u(rng)) / 4, 2 + std::fabs(u(rng)));
    const VelocityState v{u(rng), u(rng), u(rng), u(rng)};
    const VelocityState back = to_velocities(p, from_velocities(p, v));
    EXPECT_NEAR(back.vx, v.vx, 1e-14);
    EXPECT_NEAR(back.vy, v.vy, 1e-14);
  }
  // p_x couples to the y velocity, p_y to the x velocity.
  const PhaseState s = from_velocities(kDamped, {1, 2, 3, 4});
  EXPECT_DOUBLE_EQ(s.px, 4 - 0.1 * 2);
  EXPECT_DOUBLE_EQ(s.py, 3 + 0.1 * 1);
}

TEST(PhaseState, RotationRoundTrip) {
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int i = 0; i < 50; ++i) {
    const PhaseState s{u(rng), u(rng), u(rng), u(rng)};
    const PhaseState back = unrotate(rotate(s));
    EXPECT_NEAR(back.x, s.x, 1e-15);
    EXPECT_NEAR(back.y, s.y, 1e-15);
    EXPECT_NEAR(back.px, s.px, 1e-15);
    EXPECT_NEAR(back.py, s.py, 1e-15);
  }
}

TEST(Hamiltonian, RotatedFormAgreesPointwise) {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int i = 0; i < 200; ++i) {
    const BatemanParams p(0.5 + std::fabs(u(rng)), std::fabs(u(rng)) / 3, 1 + std::fabs(u(rng)));
    const PhaseState s{u(rng), u(rng), u(rng), u(rng)};
    EXPECT_LT(std::fabs(hamiltonian_xy(p, s) - hamiltonian_rotated(p, rotate(s))), 1e-12);
  }
}

TEST(Hamiltonian, EquationsOfMotionAreHamiltonsEquations) {
  // Finite-difference gradients of H reproduce the right-hand side.
  const BatemanParams p(1.3, 0.4, 2.1);
  const PhaseState s{0.3, -0.8, 1.1, 0.6};
  const double h = 1e-6;
  auto dh = [&](PhaseState plus, PhaseState minus) {
    return (hamiltonian_xy(p, plus) - hamiltonian_xy(p, minus)) / (2 * h);
  };
  const PhaseState rhs = hamilton_rhs(p, s);
  EXPECT_NEAR(rhs.x, dh({s.x, s.y, s.px + h, s.py}, {s.x, s.y, s.px - h, s.py}), 1e-8);
  EXPECT_NEAR(rhs.y, dh({s.x, s.y, s.px, s.py + h}, {s.x, s.y, s.px, s.py - h}), 1e-8);
  EXPECT_NEAR(rhs.px, -dh({s.x + h, s.y, s.px, s.py}, {s.x - h, s.y, s.px, s.py}), 1e-8);
  EXPECT_NEAR(rhs.py, -dh({s.x, s.y + h, s.px, s.py}, {s.x, s.y - h, s.px, s.py}), 1e-8);
}

TEST(Integrate, SimpleHarmonicLimit) {
  const Trajectory traj = unit_start_run(kShm);
  ASSERT_EQ(traj.states.size(), 10001u);
  double worst = 0;
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    worst = std::max(worst, std::fabs(traj.states[i].x - std::cos(traj.t[i])));
  }
  EXPECT_LT(worst, 1e-6);
}

TEST(Integrate, DampedAndAmplifiedEnvelopes) {
  const Trajectory traj = unit_start_run(kDamped);
  // Oracle: x = e^{-t/10}(cos wt + (1/(10w)) sin wt), y = e^{t/10}(cos wt - (1/(10w)) sin wt)
  const double w = std::sqrt(0.99);
  double worst_x = 0, worst_y = 0;
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    const double t = traj.t[i];
    const double x = std::exp(-t / 10) * (std::cos(w * t) + std::sin(w * t) / (10 * w));
    const double y = std::exp(t / 10) * (std::cos(w * t) - std::sin(w * t) / (10 * w));
    worst_x = std::max(worst_x, std::fabs(traj.states[i].x - x));
    worst_y = std::max(worst_y, std::fabs(traj.states[i].y - y) * std::exp(-t / 10));
    const VelocityState ref = damped_reference(kDamped, {1, 1, 0, 0}, t);
    EXPECT_NEAR(ref.x, x, 1e-12);
    EXPECT_NEAR(ref.y, y, 1e-11);
  }
  EXPECT_LT(worst_x, 1e-5);
  EXPECT_LT(worst_y, 1e-5);
  // The envelopes are reciprocal: the product x y stays bounded.
  double product = 0;
  for (const auto& s : traj.states) product = std::max(product, std::fabs(s.x * s.y));
  EXPECT_LT(product, 1.1);
}

TEST(Integrate, Rejections) {
  EXPECT_THROW(integrate_eom(kShm, {}, 1.0, 0.0), std::invalid_argument);
  EXPECT_THROW(integrate_eom(kShm, {}, -1.0, 1e-3), std::invalid_argument);
  EXPECT_THROW(integrate_eom(kShm, {std::nan(""), 0, 0, 0}, 1.0, 0.1), std::runtime_error);
}

TEST(EomResidual, RunsSatisfyTheSecondOrderEquations) {
  const EomResidual damped = eom_residual(unit_start_run(kDamped), kDamped);
  EXPECT_LT(damped.damped, 1e-4);
  EXPECT_LT(damped.amplified, 1e-4);
  const EomResidual shm = eom_residual(unit_start_run(kShm), kShm);
  EXPECT_LT(shm.damped, 1e-5);
  EXPECT_LT(shm.amplified, 1e-5);
}

TEST(EomResidual, DetectsCorruption) {
  Trajectory traj = unit_start_run(kDamped);
  // A uniform rescaling of x still solves the linear equation; corrupting half the run does not.
  Trajectory scaled = traj;
  for (auto& s : scaled.states) s.x *= 1.01;
  EXPECT_LT(eom_residual(scaled, kDamped).damped, 1e-4);
  for (std::size_t i = traj.states.size() / 2; i < traj.states.size(); ++i) traj.states[i].x *= 1.01;
  EXPECT_GT(eom_residual(traj, kDamped).damped, 1e-2);
}

TEST(EomResidual, NeedsFiveSamples) {
  const Trajectory traj = integrate_eom(kShm, {1, 0, 0, 0}, 0.3, 0.1);
  ASSERT_EQ(traj.states.size(), 4u);
  EXPECT_THROW(eom_residual(traj, kShm), std::invalid_argument);
  EXPECT_THROW(hamiltonian_consistency(traj, kShm), std::invalid_argument);
}

TEST(Consistency, EnergyConservedAndFormsAgree) {
  const HamiltonianConsistency c = hamiltonian_consistency(unit_start_run(kDamped), kDamped);
  EXPECT_LT(c.max_form_gap, 1e-10);
  EXPECT_LT(c.max_drift, 1e-7);
}

TEST(Consistency, UndampedEnergyIsDifferenceOfRotatedOscillators) {
  const Trajectory traj = unit_start_run(kShm);
  const HamiltonianConsistency c = hamiltonian_consistency(traj, kShm);
  const RotatedState r = rotate(traj.states.front());
  const double e1 = r.p1 * r.p1 / 2 + r.x1 * r.x1 / 2;
  const double e2 = r.p2 * r.p2 / 2 + r.x2 * r.x2 / 2;
  EXPECT_NEAR(c.initial_energy, e1 - e2, 1e-15);
  EXPECT_NEAR(c.initial_energy, 1.0, 1e-15);  // x = y = 1 at rest: H = k x y
}

TEST(Consistency, DriftShrinksAtHalfStep) {
  const DriftReduction d = energy_drift_reduction(kDamped, from_velocities(kDamped, {1, 1, 0, 0}), 10.0, 1e-3);
  EXPECT_LT(d.drift_coarse, 1e-7);
  EXPECT_GE(d.ratio, 16.0);
  EXPECT_LT(d.ratio, 64.0);
}

TEST(Csv, TrajectoryColumns) {
  const Trajectory traj = integrate_eom(kShm, {1, 0, 0, 0}, 1.0, 0.25);
  const std::string csv = trajectory_csv(traj, kShm, 2);
  EXPECT_EQ(csv.rfind("t,x,y,p_x,p_y,H\n0,1,0,0,0,0\n0.5,", 0), 0u) << csv;
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
  EXPECT_THROW(trajectory_csv(traj, kShm, 0), std::invalid_argument);
}

}  // namespace
}  // namespace bateman
