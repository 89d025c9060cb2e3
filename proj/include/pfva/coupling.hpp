// Reflected inertia at the two actuator inputs and the dynamic coupling
// term mu between them.
//
// A joint-side inertia I seen through the row of velocity ratios
// G = [R_v R_f] appears at the inputs as I_M + I * G^T G. The off-diagonal
// entry, mu = I * rho / (rho + 1)^2, is the inertia through which each
// input's acceleration loads the other input.
#pragma once

#include <pfva/errors.hpp>
#include <pfva/gear_train.hpp>

#include <cmath>
#include <concepts>
#include <cstddef>
#include <vector>

namespace pfva {

/// Rotor inertias (kg m^2) of the velocity-input and force-input motors.
template <std::floating_point T = double>
struct MotorInertias {
  T i_mv{};
  T i_mf{};
};

/// Symmetric 2x2 input-space inertia matrix (kg m^2), ordered (v, f).
template <std::floating_point T = double>
struct ReflectedInertia2x2 {
  T a_vv{};
  T a_vf{};
  T a_fv{};
  T a_ff{};

  T mu() const { return a_vf; }
  T determinant() const { return a_vv * a_ff - a_vf * a_fv; }
};

namespace detail {

template <std::floating_point T>
void require_nonnegative_inertia(T i_joint) {
  if (!(i_joint >= T(0))) {
    throw DomainError("joint reflected inertia must be nonnegative");
  }
}

template <std::floating_point T>
void require_valid_motors(const MotorInertias<T>& m) {
  if (!(m.i_mv >= T(0)) || !(m.i_mf >= T(0))) {
    throw DomainError("motor rotor inertias must be nonnegative");
  }
}

}  // namespace detail

template <std::floating_point T>
ReflectedInertia2x2<T> reflected_inertia(T rho, T i_joint, const MotorInertias<T>& m) {
  detail::require_regular_rho(rho);
  detail::require_nonnegative_inertia(i_joint);
  detail::require_valid_motors(m);
  const T d = (rho + T(1)) * (rho + T(1));
  ReflectedInertia2x2<T> out;
  out.a_vv = m.i_mv + i_joint / d;
  out.a_vf = i_joint * rho / d;
  out.a_fv = out.a_vf;
  out.a_ff = m.i_mf + i_joint * (rho * rho) / d;
  return out;
}

template <std::floating_point T>
T coupling_mu(T rho, T i_joint) {
  detail::require_regular_rho(rho);
  detail::require_nonnegative_inertia(i_joint);
  return i_joint * rho / ((rho + T(1)) * (rho + T(1)));
}

/// d(mu)/d(rho) = I (1 - rho) / (rho + 1)^3.
template <std::floating_point T>
T coupling_sensitivity(T rho, T i_joint) {
  detail::require_regular_rho(rho);
  detail::require_nonnegative_inertia(i_joint);
  const T s = rho + T(1);
  return i_joint * (T(1) - rho) / (s * s * s);
}

/// Reflected inertia as rho -> infinity: the force input carries the whole
/// joint inertia and the off-diagonal vanishes.
template <std::floating_point T>
ReflectedInertia2x2<T> limit_reflected_inertia(T i_joint, const MotorInertias<T>& m) {
  detail::require_nonnegative_inertia(i_joint);
  detail::require_valid_motors(m);
  return {m.i_mv, T(0), T(0), m.i_mf + i_joint};
}

enum class Spacing { linear, log };

template <std::floating_point T = double>
struct MuCurveRow {
  T rho{};
  T mu{};
  T dmu_drho{};
};

/// Samples mu and d(mu)/d(rho) over [rho_min, rho_max]. Log spacing needs
/// rho_min > 0. Endpoints are hit exactly.
template <std::floating_point T>
std::vector<MuCurveRow<T>> mu_curve(T rho_min, T rho_max, std::size_t n_samples, T i_joint,
                                    Spacing spacing = Spacing::linear) {
  if (!(rho_min < rho_max)) {
    throw DomainError("mu curve needs rho_min < rho_max");
  }
  if (n_samples < 2) {
    throw DomainError("mu curve needs at least 2 samples");
  }
  if (rho_min <= T(-1) && T(-1) <= rho_max) {
    throw SingularParameterError("mu curve interval contains the singular point rho = -1");
  }
  if (spacing == Spacing::log && !(rho_min > T(0))) {
    throw DomainError("log-spaced mu curve needs rho_min > 0");
  }
  detail::require_nonnegative_inertia(i_joint);

  std::vector<MuCurveRow<T>> rows(n_samples);
  const T last = static_cast<T>(n_samples - 1);
  const T lo = spacing == Spacing::log ? std::log10(rho_min) : rho_min;
  const T hi = spacing == Spacing::log ? std::log10(rho_max) : rho_max;
  for (std::size_t k = 0; k < n_samples; ++k) {
    T rho;
    if (k == 0) {
      rho = rho_min;
    } else if (k + 1 == n_samples) {
      rho = rho_max;
    } else {
      const T u = lo + (hi - lo) * static_cast<T>(k) / last;
      rho = spacing == Spacing::log ? std::pow(T(10), u) : u;
    }
    rows[k] = {rho, coupling_mu(rho, i_joint), coupling_sensitivity(rho, i_joint)};
  }
  return rows;
}

}  // namespace pfva
