#include "bateman/classical.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "bateman/csv.hpp"

namespace bateman {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void require_samples(const Trajectory& traj) {
  if (traj.states.size() < 5 || traj.t.size() != traj.states.size()) {
    throw std::invalid_argument("trajectory needs at least 5 uniformly spaced samples");
  }
}

}  // namespace

BatemanParams::BatemanParams(double m, double gamma, double k) : m_(m), gamma_(gamma), k_(k) {
  if (!(m > 0)) throw std::invalid_argument("mass must be positive");
  if (!(gamma >= 0)) throw std::invalid_argument("gamma must be non-negative");
  if (!(k > 0)) throw std::invalid_argument("spring constant must be positive");
  if (!(omega2() > 0)) throw std::invalid_argument("parameters are not underdamped: omega^2 <= 0");
}

PhaseState from_velocities(const BatemanParams& p, const VelocityState& v) {
  const double g = p.gamma() / 2;
  return {v.x, v.y, p.m() * v.vy - g * v.y, p.m() * v.vx + g * v.x};
}

VelocityState to_velocities(const BatemanParams& p, const PhaseState& s) {
  const double g = p.gamma() / 2;
  return {s.x, s.y, (s.py - g * s.x) / p.m(), (s.px + g * s.y) / p.m()};
}

RotatedState rotate(const PhaseState& s) {
  return {kInvSqrt2 * (s.x + s.y), kInvSqrt2 * (s.x - s.y), kInvSqrt2 * (s.px + s.py), kInvSqrt2 * (s.px - s.py)};
}

PhaseState unrotate(const RotatedState& r) {
  return {kInvSqrt2 * (r.x1 + r.x2), kInvSqrt2 * (r.x1 - r.x2), kInvSqrt2 * (r.p1 + r.p2), kInvSqrt2 * (r.p1 - r.p2)};
}

double hamiltonian_xy(const BatemanParams& p, const PhaseState& s) {
  return s.px * s.py / p.m() + p.gamma() / (2 * p.m()) * (s.y * s.py - s.x * s.px) + p.coupling() * s.x * s.y;
}

double hamiltonian_rotated(const BatemanParams& p, const RotatedState& r) {
  return (r.p1 * r.p1 - r.p2 * r.p2) / (2 * p.m()) + 0.5 * p.m() * p.omega2() * (r.x1 * r.x1 - r.x2 * r.x2) -
         p.gamma() / (2 * p.m()) * (r.p1 * r.x2 + r.p2 * r.x1);
}

VelocityState damped_reference(const BatemanParams& p, const VelocityState& init, double t) {
  const double beta = p.gamma() / (2 * p.m());
  const double w = p.omega();
  const double c = std::cos(w * t), s = std::sin(w * t);
  // u'' + 2 b u' + (b^2 + w^2) u = 0 with b = +beta for x and -beta for y
  auto solve = [&](double b, double u0, double v0, double& u, double& v) {
    const double e = std::exp(-b * t);
    const double a = u0, bb = (v0 + b * u0) / w;
    u = e * (a * c + bb * s);
    v = e * (-b * (a * c + bb * s) + w * (-a * s + bb * c));
  };
  VelocityState out;
  solve(beta, init.x, init.vx, out.x, out.vx);
  solve(-beta, init.y, init.vy, out.y, out.vy);
  return out;
}

EomResidual eom_residual(const Trajectory& traj, const BatemanParams& p) {
  require_samples(traj);
  const double h = traj.dt;
  EomResidual r;
  for (std::size_t i = 1; i + 1 < traj.states.size(); ++i) {
    const auto& a = traj.states[i - 1];
    const auto& b = traj.states[i];
    const auto& c = traj.states[i + 1];
    const double xd = (c.x - a.x) / (2 * h), xdd = (c.x - 2 * b.x + a.x) / (h * h);
    const double yd = (c.y - a.y) / (2 * h), ydd = (c.y - 2 * b.y + a.y) / (h * h);
    r.damped = std::max(r.damped, std::fabs(p.m() * xdd + p.gamma() * xd + p.k() * b.x));
    r.amplified = std::max(r.amplified, std::fabs(p.m() * ydd - p.gamma() * yd + p.k() * b.y));
  }
  return r;
}

HamiltonianConsistency hamiltonian_consistency(const Trajectory& traj, const BatemanParams& p) {
  require_samples(traj);
  HamiltonianConsistency r;
  r.initial_energy = hamiltonian_xy(p, traj.states.front());
  for (const auto& s : traj.states) {
    const double h = hamiltonian_xy(p, s);
    r.max_form_gap = std::max(r.max_form_gap, std::fabs(h - hamiltonian_rotated(p, rotate(s))));
    r.max_drift = std::max(r.max_drift, std::fabs(h - r.initial_energy));
  }
  return r;
}

DriftReduction energy_drift_reduction(const BatemanParams& p, const PhaseState& init, double t_end, double dt) {
  using Quad113 = boost::multiprecision::cpp_bin_float_quad;
  auto drift = [&](double step) {
    const PhaseStateT<Quad113> s0{init.x, init.y, init.px, init.py};
    const auto traj = integrate_eom_t<Quad113>(p, s0, t_end, step);
    const Quad113 m(p.m()), g(p.gamma() / (2 * p.m())), c(p.coupling());
    auto energy = [&](const PhaseStateT<Quad113>& s) {
      return s.px * s.py / m + g * (s.y * s.py - s.x * s.px) + c * s.x * s.y;
    };
    const Quad113 e0 = energy(traj.states.front());
    Quad113 worst = 0;
    for (const auto& s : traj.states) worst = std::max(worst, Quad113(abs(energy(s) - e0)));
    return static_cast<double>(worst);
  };
  DriftReduction r;
  r.drift_coarse = drift(dt);
  r.drift_fine = drift(dt / 2);
  r.ratio = r.drift_coarse / r.drift_fine;
  return r;
}

std::string trajectory_csv(const Trajectory& traj, const BatemanParams& p, long stride) {
  if (stride < 1) throw std::invalid_argument("CSV stride must be positive");
  CsvTable table({"t", "x", "y", "p_x", "p_y", "H"});
  for (std::size_t i = 0; i < traj.states.size(); i += static_cast<std::size_t>(stride)) {
    const auto& s = traj.states[i];
    table.add_row({format_real(traj.t[i]), format_real(s.x), format_real(s.y), format_real(s.px), format_real(s.py),
                   format_real(hamiltonian_xy(p, s))});
  }
  return table.str();
}

}  // namespace bateman
