// Trapezoidal (accelerate / cruise / decelerate) slider motion and its
// pullback to crank motion.
#pragma once

#include <pfva/errors.hpp>
#include <pfva/mechanism.hpp>

#include <algorithm>
#include <cmath>
#include <concepts>

namespace pfva {

/// Dead-center threshold on |dx/dtheta| (m/rad).
inline constexpr double kDeadCenterKic = 1e-9;

template <std::floating_point T = double>
struct TrapezoidProfile {
  T x0{};
  T xf{};
  T v_max{};
  T a_max{};
  T t_acc{};
  T t_cruise{};
  T t_dec{};
  /// +1, -1, or 0 for a stationary profile.
  int direction{};
  /// Speed reached at the end of the ramp; below v_max for triangular profiles.
  T v_peak{};

  T duration() const { return t_acc + t_cruise + t_dec; }
  bool triangular() const { return t_cruise == T(0) && direction != 0; }
};

template <std::floating_point T = double>
struct SliderSample {
  T x{};
  T x_dot{};
  T x_ddot{};
};

template <std::floating_point T>
TrapezoidProfile<T> plan_trapezoid(T x0, T xf, T v_max, T a_max) {
  if (!(v_max > T(0)) || !(a_max > T(0))) {
    throw DomainError("trapezoid limits v_max and a_max must be positive");
  }
  TrapezoidProfile<T> p;
  p.x0 = x0;
  p.xf = xf;
  p.v_max = v_max;
  p.a_max = a_max;
  const T distance = std::abs(xf - x0);
  if (distance == T(0)) {
    return p;
  }
  p.direction = xf > x0 ? 1 : -1;

  if (distance < v_max * v_max / a_max) {
    // Never reaches v_max: two ramps meeting at the peak.
    p.v_peak = std::sqrt(a_max * distance);
    p.t_acc = p.v_peak / a_max;
    p.t_cruise = T(0);
  } else {
    p.v_peak = v_max;
    p.t_acc = v_max / a_max;
    p.t_cruise = (distance - v_max * v_max / a_max) / v_max;
  }
  p.t_dec = p.t_acc;
  return p;
}

/// Position, velocity and acceleration at time t. Times outside [0, T]
/// are clamped to the nearest end.
template <std::floating_point T>
SliderSample<T> sample(const TrapezoidProfile<T>& p, T t) {
  const T total = p.duration();
  if (p.direction == 0) {
    return {p.x0, T(0), T(0)};
  }
  t = std::clamp(t, T(0), total);
  const T sgn = static_cast<T>(p.direction);
  const T a = p.a_max;
  const T v = p.v_peak;
  const T d_ramp = T(0.5) * a * p.t_acc * p.t_acc;
  const T t_decel_start = p.t_acc + p.t_cruise;

  if (t < p.t_acc) {
    return {p.x0 + sgn * T(0.5) * a * t * t, sgn * a * t, sgn * a};
  }
  if (t < t_decel_start) {
    const T tc = t - p.t_acc;
    return {p.x0 + sgn * (d_ramp + v * tc), sgn * v, T(0)};
  }
  // Evaluated backwards from the end so x(T) == xf exactly.
  const T remaining = total - t;
  return {p.xf - sgn * T(0.5) * a * remaining * remaining, sgn * a * remaining, -sgn * a};
}

/// Crank angle, rate and acceleration that produce the profile's slider
/// motion at time t:
///   theta_dot = x_dot / G,  theta_ddot = (x_ddot - H theta_dot^2) / G.
template <std::floating_point T>
JointState<T> joint_trajectory(const TrapezoidProfile<T>& p, const CrankSliderGeometry<T>& g, T t) {
  const SliderSample<T> s = sample(p, t);
  JointState<T> j;
  j.theta = joint_from_slider(g, s.x);
  const T kic1 = kic_first(g, j.theta);
  if (std::abs(kic1) < T(kDeadCenterKic)) {
    throw DeadCenterError("slider trajectory reaches a dead-center configuration");
  }
  j.theta_dot = s.x_dot / kic1;
  j.theta_ddot = (s.x_ddot - kic_second(g, j.theta) * j.theta_dot * j.theta_dot) / kic1;
  return j;
}

}  // namespace pfva
