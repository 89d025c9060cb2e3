// Crank-slider kinematics and its single-link-equivalent inertia.
//
// The crank (length r) pivots at the origin; the coupler (length l) joins the
// crank pin to a slider on the x axis. With theta measured from the slider
// axis the slider sits at
//
//   x(theta) = r cos(theta) + sqrt(l^2 - r^2 sin^2(theta)).
//
// Working branch is theta in [0, pi], where x decreases monotonically from
// l + r to l - r.
#pragma once

#include <pfva/errors.hpp>

#include <cmath>
#include <concepts>
#include <numbers>

namespace pfva {

template <std::floating_point T = double>
struct CrankSliderGeometry {
  T crank_r{T(0.15)};
  T coupler_l{T(0.45)};

  T stroke_min() const { return coupler_l - crank_r; }
  T stroke_max() const { return coupler_l + crank_r; }
};

/// The coupler is lumped as two point masses of m_coupler / 2, one at each
/// pin. Its rotary inertia about the midpoint is not represented.
template <std::floating_point T = double>
struct MechanismMasses {
  T i_crank{T(0.01)};
  T m_coupler{T(0.5)};
  T m_slider{T(1.0)};
};

template <std::floating_point T = double>
struct JointState {
  T theta{};
  T theta_dot{};
  T theta_ddot{};
};

template <std::floating_point T>
void validate(const CrankSliderGeometry<T>& g) {
  if (!(g.crank_r > T(0)) || !(g.coupler_l > g.crank_r)) {
    throw DomainError("crank-slider geometry needs 0 < crank_r < coupler_l");
  }
}

template <std::floating_point T>
void validate(const MechanismMasses<T>& m) {
  if (!(m.i_crank >= T(0)) || !(m.m_coupler >= T(0)) || !(m.m_slider >= T(0))) {
    throw DomainError("mechanism masses and inertias must be nonnegative");
  }
}

template <std::floating_point T>
T slider_position(const CrankSliderGeometry<T>& g, T theta) {
  const T s = g.crank_r * std::sin(theta);
  return g.crank_r * std::cos(theta) + std::sqrt(g.coupler_l * g.coupler_l - s * s);
}

/// First-order KIC dx/dtheta (m/rad).
template <std::floating_point T>
T kic_first(const CrankSliderGeometry<T>& g, T theta) {
  const T r = g.crank_r;
  const T sn = std::sin(theta);
  const T cs = std::cos(theta);
  const T root = std::sqrt(g.coupler_l * g.coupler_l - r * r * sn * sn);
  return -r * sn - r * r * sn * cs / root;
}

/// Second-order KIC d^2x/dtheta^2 (m/rad^2).
template <std::floating_point T>
T kic_second(const CrankSliderGeometry<T>& g, T theta) {
  const T r = g.crank_r;
  const T r2 = r * r;
  const T sn = std::sin(theta);
  const T cs = std::cos(theta);
  const T rad = g.coupler_l * g.coupler_l - r2 * sn * sn;
  const T root = std::sqrt(rad);
  // d/dtheta [ -r2 sin cos / root ] = -r2 cos(2 theta) / root - r2^2 sin^2 cos^2 / root^3
  const T cos2 = cs * cs - sn * sn;
  return -r * cs - r2 * cos2 / root - r2 * r2 * sn * sn * cs * cs / (rad * root);
}

/// Crank angle in [0, pi] placing the slider at x, by bisection on the
/// monotone branch. Converges until the slider residual is <= 1e-12 m or the
/// bracket collapses to adjacent doubles.
template <std::floating_point T>
T joint_from_slider(const CrankSliderGeometry<T>& g, T x) {
  const T lo_x = g.stroke_min();
  const T hi_x = g.stroke_max();
  if (!(x >= lo_x && x <= hi_x)) {
    throw OutOfStrokeError("slider position outside the reachable stroke [l - r, l + r]");
  }
  if (x == hi_x) {
    return T(0);
  }
  if (x == lo_x) {
    return std::numbers::pi_v<T>;
  }

  // slider_position is decreasing: f(lo) > x > f(hi).
  T lo = T(0);
  T hi = std::numbers::pi_v<T>;
  T mid = T(0.5) * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    mid = T(0.5) * (lo + hi);
    if (mid <= lo || mid >= hi) {
      break;
    }
    const T residual = slider_position(g, mid) - x;
    if (residual == T(0)) {
      break;
    }
    if (residual > T(0)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return mid;
}

/// Joint-referred inertia I*(theta) of crank, lumped coupler and slider.
template <std::floating_point T>
T effective_inertia(const CrankSliderGeometry<T>& g, const MechanismMasses<T>& m, T theta) {
  const T half_coupler = T(0.5) * m.m_coupler;
  const T kic = kic_first(g, theta);
  return m.i_crank + half_coupler * g.crank_r * g.crank_r + (half_coupler + m.m_slider) * kic * kic;
}

}  // namespace pfva
