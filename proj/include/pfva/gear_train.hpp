// Dual-input single-output epicyclic transmission algebra.
//
// The velocity input (carrier) and force input (sun) sum into the output
// (ring) through reductions R_v and R_f with R_v + R_f = 1. The design
// variable is the relative scale factor rho = R_f / R_v.
#pragma once

#include <pfva/errors.hpp>

#include <cmath>
#include <concepts>
#include <string>
#include <tuple>
#include <utility>

namespace pfva {

/// Distance from rho = 1 below which the near-unity advisory is raised.
inline constexpr double kUnityRhoTolerance = 1e-9;

template <std::floating_point T = double>
struct GearReductions {
  T r_v{};
  T r_f{};
  T rho{};
  /// Set when rho is within kUnityRhoTolerance of 1: both inputs see the same
  /// reduction and the train degenerates to a unity-ratio SISO drive.
  bool near_unity_warning = false;
};

/// Angular velocities (rad/s) and torques (N m) at the three ports.
template <std::floating_point T = double>
struct PfvaState {
  T omega_v{};
  T omega_f{};
  T omega_o{};
  T tau_v{};
  T tau_f{};
  T tau_o{};
};

namespace detail {

/// Splits 1 into {a', b} with a' + b == 1 in floating point, a' ~ a, b ~ 1 - a.
/// a' == a unless b lands on a coarser grid than a (|b| > 1); then a' is
/// taken as 1 - b, which is exact there.
template <std::floating_point T>
std::pair<T, T> exact_unit_split(T a) {
  T b = T(1) - a;
  for (const T candidate : {b, std::nextafter(b, T(0)), std::nextafter(b, T(2) * b)}) {
    if (a + candidate == T(1)) {
      return {a, candidate};
    }
  }
  return {T(1) - b, b};
}

template <std::floating_point T>
void require_regular_rho(T rho) {
  if (rho == T(-1)) {
    throw SingularParameterError("relative scale factor rho = -1 makes the gear reductions singular");
  }
}

}  // namespace detail

/// R_v = 1/(rho+1), R_f = rho/(rho+1). Throws at rho = -1.
template <std::floating_point T>
GearReductions<T> reductions_from_rho(T rho) {
  detail::require_regular_rho(rho);
  GearReductions<T> g;
  g.rho = rho;
  // One reduction is evaluated directly, the other as its complement, so
  // r_v + r_f == 1 in floating point. The direct one is whichever would
  // otherwise suffer cancellation in 1 - x.
  if (std::abs(rho) < T(1)) {
    std::tie(g.r_f, g.r_v) = detail::exact_unit_split(rho / (rho + T(1)));
  } else {
    std::tie(g.r_v, g.r_f) = detail::exact_unit_split(T(1) / (rho + T(1)));
  }
  g.near_unity_warning = std::abs(rho - T(1)) < T(kUnityRhoTolerance);
  return g;
}

/// Inverse of reductions_from_rho. Requires r_v != 0.
template <std::floating_point T>
T rho_of(const GearReductions<T>& g) {
  if (g.r_v == T(0)) {
    throw SingularParameterError("rho is undefined when the velocity-side reduction is zero");
  }
  return g.r_f / g.r_v;
}

template <std::floating_point T>
T output_velocity(T omega_v, T omega_f, const GearReductions<T>& g) {
  return g.r_v * omega_v + g.r_f * omega_f;
}

/// Splits an output torque into the two input torques {tau_v, tau_f}.
template <std::floating_point T>
std::pair<T, T> input_torques(T tau_o, const GearReductions<T>& g) {
  return {g.r_v * tau_o, g.r_f * tau_o};
}

/// Builds a state that satisfies the velocity and torque maps for `g`.
template <std::floating_point T>
PfvaState<T> make_state(T omega_v, T omega_f, T tau_o, const GearReductions<T>& g) {
  PfvaState<T> s;
  s.omega_v = omega_v;
  s.omega_f = omega_f;
  s.omega_o = output_velocity(omega_v, omega_f, g);
  s.tau_o = tau_o;
  std::tie(s.tau_v, s.tau_f) = input_torques(tau_o, g);
  return s;
}

/// Output power minus input power; zero for a lossless consistent state.
template <std::floating_point T>
T power_residual(const PfvaState<T>& s) {
  return s.tau_o * s.omega_o - s.tau_v * s.omega_v - s.tau_f * s.omega_f;
}

}  // namespace pfva
