// Splitting joint motion between the two inputs, and the inertial torque
// each input must supply.
#pragma once

#include <pfva/coupling.hpp>
#include <pfva/errors.hpp>
#include <pfva/gear_train.hpp>
#include <pfva/mechanism.hpp>

#include <concepts>
#include <optional>
#include <string>
#include <string_view>

namespace pfva {

/// Rates of the velocity input (phi_v) and force input (phi_f).
template <std::floating_point T = double>
struct InputMotion {
  T phi_v_dot{};
  T phi_f_dot{};
  T phi_v_ddot{};
  T phi_f_ddot{};
};

/// How a joint rate is shared between the two inputs. The joint only fixes
/// R_v phi_v + R_f phi_f, so one extra condition is needed:
///   velocity_only  phi_f held still
///   force_only     phi_v held still
///   min_norm       least Euclidean norm of (phi_v, phi_f)
enum class AllocationPolicy { velocity_only, force_only, min_norm };

inline std::string_view to_string(AllocationPolicy p) {
  switch (p) {
    case AllocationPolicy::velocity_only:
      return "velocity_only";
    case AllocationPolicy::force_only:
      return "force_only";
    case AllocationPolicy::min_norm:
      return "min_norm";
  }
  return "unknown";
}

inline std::optional<AllocationPolicy> parse_policy(std::string_view name) {
  if (name == "velocity_only") return AllocationPolicy::velocity_only;
  if (name == "force_only") return AllocationPolicy::force_only;
  if (name == "min_norm") return AllocationPolicy::min_norm;
  return std::nullopt;
}

/// Inertial torques (N m). coupling_on_v is the part of tau_v_inertial caused
/// by the force input's acceleration (mu * phi_f_ddot), and vice versa.
template <std::floating_point T = double>
struct InertialTorques {
  T tau_v_inertial{};
  T tau_f_inertial{};
  T coupling_on_v{};
  T coupling_on_f{};
};

template <std::floating_point T>
InputMotion<T> allocate(const JointState<T>& joint, const GearReductions<T>& g, AllocationPolicy policy) {
  InputMotion<T> m;
  switch (policy) {
    case AllocationPolicy::velocity_only:
      if (g.r_v == T(0)) {
        throw DegeneratePolicyError("velocity_only allocation needs a nonzero velocity-side reduction");
      }
      m.phi_v_dot = joint.theta_dot / g.r_v;
      m.phi_v_ddot = joint.theta_ddot / g.r_v;
      break;
    case AllocationPolicy::force_only:
      if (g.r_f == T(0)) {
        throw DegeneratePolicyError("force_only allocation needs a nonzero force-side reduction");
      }
      m.phi_f_dot = joint.theta_dot / g.r_f;
      m.phi_f_ddot = joint.theta_ddot / g.r_f;
      break;
    case AllocationPolicy::min_norm: {
      // G^T (G G^T)^-1 for the 1x2 row G = [R_v R_f].
      const T gg = g.r_v * g.r_v + g.r_f * g.r_f;
      m.phi_v_dot = g.r_v * joint.theta_dot / gg;
      m.phi_f_dot = g.r_f * joint.theta_dot / gg;
      m.phi_v_ddot = g.r_v * joint.theta_ddot / gg;
      m.phi_f_ddot = g.r_f * joint.theta_ddot / gg;
      break;
    }
  }
  return m;
}

template <std::floating_point T>
InertialTorques<T> inertial_torques(const InputMotion<T>& motion, T rho, T i_joint, const MotorInertias<T>& m) {
  const ReflectedInertia2x2<T> a = reflected_inertia(rho, i_joint, m);
  InertialTorques<T> out;
  out.coupling_on_v = a.a_vf * motion.phi_f_ddot;
  out.coupling_on_f = a.a_fv * motion.phi_v_ddot;
  out.tau_v_inertial = a.a_vv * motion.phi_v_ddot + out.coupling_on_v;
  out.tau_f_inertial = out.coupling_on_f + a.a_ff * motion.phi_f_ddot;
  return out;
}

/// Inertial torques as rho -> infinity; coupling terms are identically zero.
template <std::floating_point T>
InertialTorques<T> limit_inertial_torques(const InputMotion<T>& motion, T i_joint, const MotorInertias<T>& m) {
  const ReflectedInertia2x2<T> a = limit_reflected_inertia(i_joint, m);
  InertialTorques<T> out;
  out.tau_v_inertial = a.a_vv * motion.phi_v_ddot;
  out.tau_f_inertial = a.a_ff * motion.phi_f_ddot;
  return out;
}

}  // namespace pfva
