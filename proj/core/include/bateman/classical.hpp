#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

// Classical Bateman dual oscillator: the damped coordinate x and its amplified partner y.
//   L = m x' y' + (gamma/2)(x y' - x' y) - k x y
//   H = p_x p_y / m + (gamma/2m)(y p_y - x p_x) + (k - gamma^2/4m) x y
// with p_x = m y' - (gamma/2) y and p_y = m x' + (gamma/2) x.

namespace bateman {

class BatemanParams {
 public:
  /// Throws std::invalid_argument unless m > 0, gamma >= 0, k > 0 and omega2 > 0.
  BatemanParams(double m, double gamma, double k);

  double m() const { return m_; }
  double gamma() const { return gamma_; }
  double k() const { return k_; }
  /// k/m - gamma^2/(4 m^2)
  double omega2() const { return k_ / m_ - gamma_ * gamma_ / (4 * m_ * m_); }
  double omega() const { return std::sqrt(omega2()); }
  /// Coefficient of x y in H, equal to m * omega2.
  double coupling() const { return k_ - gamma_ * gamma_ / (4 * m_); }

 private:
  double m_;
  double gamma_;
  double k_;
};

template <typename T>
struct PhaseStateT {
  T x{}, y{}, px{}, py{};
};
using PhaseState = PhaseStateT<double>;

/// Positions and velocities; the user-facing way to specify initial conditions.
struct VelocityState {
  double x = 0, y = 0, vx = 0, vy = 0;
};

/// x1 = (x + y)/sqrt2, x2 = (x - y)/sqrt2, p1 = (p_x + p_y)/sqrt2, p2 = (p_x - p_y)/sqrt2.
struct RotatedState {
  double x1 = 0, x2 = 0, p1 = 0, p2 = 0;
};

PhaseState from_velocities(const BatemanParams& p, const VelocityState& v);
VelocityState to_velocities(const BatemanParams& p, const PhaseState& s);
RotatedState rotate(const PhaseState& s);
PhaseState unrotate(const RotatedState& r);

/// H in the (x, y) coordinates.
double hamiltonian_xy(const BatemanParams& p, const PhaseState& s);
/// H in the rotated coordinates:
/// (p1^2 - p2^2)/2m + m omega2 (x1^2 - x2^2)/2 - (gamma/2m)(p1 x2 + p2 x1)
double hamiltonian_rotated(const BatemanParams& p, const RotatedState& r);

/// Hamilton's equations in the (x, y) chart.
template <typename T>
PhaseStateT<T> hamilton_rhs(const BatemanParams& p, const PhaseStateT<T>& s) {
  const T m(p.m()), half_rate(p.gamma() / (2 * p.m())), c(p.coupling());
  return {s.py / m - half_rate * s.x, s.px / m + half_rate * s.y, half_rate * s.px - c * s.y,
          -half_rate * s.py - c * s.x};
}

template <typename T>
PhaseStateT<T> rk4_step(const BatemanParams& p, const PhaseStateT<T>& s, const T& dt) {
  auto axpy = [](const PhaseStateT<T>& a, const T& h, const PhaseStateT<T>& d) {
    return PhaseStateT<T>{a.x + h * d.x, a.y + h * d.y, a.px + h * d.px, a.py + h * d.py};
  };
  const T half = dt / 2;
  const PhaseStateT<T> k1 = hamilton_rhs(p, s);
  const PhaseStateT<T> k2 = hamilton_rhs(p, axpy(s, half, k1));
  const PhaseStateT<T> k3 = hamilton_rhs(p, axpy(s, half, k2));
  const PhaseStateT<T> k4 = hamilton_rhs(p, axpy(s, dt, k3));
  const T sixth = dt / 6;
  return {s.x + sixth * (k1.x + 2 * k2.x + 2 * k3.x + k4.x), s.y + sixth * (k1.y + 2 * k2.y + 2 * k3.y + k4.y),
          s.px + sixth * (k1.px + 2 * k2.px + 2 * k3.px + k4.px),
          s.py + sixth * (k1.py + 2 * k2.py + 2 * k3.py + k4.py)};
}

template <typename T>
struct TrajectoryT {
  /// Uniform spacing; t[i] = i * dt.
  double dt = 0;
  std::vector<double> t;
  std::vector<PhaseStateT<T>> states;
};
using Trajectory = TrajectoryT<double>;

/// Classic RK4 with n = round(t_end / dt) steps of size t_end / n; every step is sampled.
/// Throws std::invalid_argument for non-positive dt or t_end, std::runtime_error on NaN.
/// Infinite values (overflow of the amplified mode) are kept.
template <typename T>
TrajectoryT<T> integrate_eom_t(const BatemanParams& p, const PhaseStateT<T>& init, double t_end, double dt) {
  if (!(dt > 0) || !(t_end > 0)) throw std::invalid_argument("integration needs dt > 0 and t_end > 0");
  const long steps = std::max(1L, std::lround(t_end / dt));
  const double h = t_end / static_cast<double>(steps);
  TrajectoryT<T> out;
  out.dt = h;
  out.t.reserve(steps + 1);
  out.states.reserve(steps + 1);
  out.t.push_back(0.0);
  out.states.push_back(init);
  PhaseStateT<T> s = init;
  const T step(h);
  for (long i = 1; i <= steps; ++i) {
    s = rk4_step(p, s, step);
    using std::isnan;
    if (isnan(s.x) || isnan(s.y) || isnan(s.px) || isnan(s.py)) {
      throw std::runtime_error("RK4 produced NaN at step " + std::to_string(i));
    }
    out.t.push_back(static_cast<double>(i) * h);
    out.states.push_back(s);
  }
  return out;
}

inline Trajectory integrate_eom(const BatemanParams& p, const PhaseState& init, double t_end, double dt) {
  return integrate_eom_t<double>(p, init, t_end, dt);
}

/// Closed-form underdamped solution: x decays with rate gamma/2m, y grows with the same rate.
VelocityState damped_reference(const BatemanParams& p, const VelocityState& init, double t);

struct EomResidual {
  /// max |m x'' + gamma x' + k x| over interior samples (central differences)
  double damped = 0;
  /// max |m y'' - gamma y' + k y|
  double amplified = 0;
};

/// Throws std::invalid_argument for fewer than 5 samples.
EomResidual eom_residual(const Trajectory& traj, const BatemanParams& p);

struct HamiltonianConsistency {
  /// max over samples of |H_xy - H_rotated|
  double max_form_gap = 0;
  /// max over samples of |H(t) - H(0)|
  double max_drift = 0;
  double initial_energy = 0;
};

/// Throws std::invalid_argument for fewer than 5 samples.
HamiltonianConsistency hamiltonian_consistency(const Trajectory& traj, const BatemanParams& p);

struct DriftReduction {
  double drift_coarse = 0;
  double drift_fine = 0;
  /// drift_coarse / drift_fine; about 2^4 = 16 for a fourth-order scheme, or more while the
  /// error is still dominated by the leading term's cancellation.
  double ratio = 0;
};

/// Runs RK4 at dt and dt/2 in 113-bit binary floating point, so the comparison is not masked by
/// double rounding, and reports the maximal energy drift of each run.
DriftReduction energy_drift_reduction(const BatemanParams& p, const PhaseState& init, double t_end, double dt);

/// Columns: t, x, y, p_x, p_y, H.
std::string trajectory_csv(const Trajectory& traj, const BatemanParams& p, long stride = 1);

}  // namespace bateman
