// Time-stepped inverse dynamics of the crank-slider under a trapezoidal
// slider plan, and sweeps of that run over the relative scale factor.
#pragma once

#include <pfva/config.hpp>
#include <pfva/coupling.hpp>
#include <pfva/dynamics.hpp>
#include <pfva/errors.hpp>
#include <pfva/gear_train.hpp>
#include <pfva/mechanism.hpp>
#include <pfva/trajectory.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <future>
#include <span>
#include <string>
#include <vector>

namespace pfva {

struct SimulationRecord {
  double t{};
  double x{};
  double x_dot{};
  double x_ddot{};
  double theta{};
  double theta_dot{};
  double theta_ddot{};
  double i_joint{};
  double mu{};
  double phi_v_ddot{};
  double phi_f_ddot{};
  double tau_v_inertial{};
  double tau_f_inertial{};
  double coupling_on_v{};
  double coupling_on_f{};
};

/// Per-rho statistics over one run. The mu statistics use |mu| so they stay
/// nonnegative for negative rho.
struct SweepRow {
  double rho{};
  double peak_coupling_torque{};  // max over records of max(|coupling_on_v|, |coupling_on_f|)
  double peak_mu{};
  double mean_mu{};
  double peak_tau_v{};  // max |tau_v_inertial|
  double peak_tau_f{};  // max |tau_f_inertial|
};

struct SweepSummary {
  AllocationPolicy policy{};
  std::vector<SweepRow> rows;
};

/// A run inside a sweep failed; carries the rho it was run at.
struct SweepRunError : Error {
  SweepRunError(double rho_, const std::string& what) : Error(what), rho(rho_) {}
  double rho;
};

/// Sample times over [0, T]: ceil(T * rate) equal intervals, ending exactly
/// at T. A zero-duration profile gives the single time 0.
inline std::vector<double> sample_times(double duration, double sample_rate) {
  if (!(duration > 0.0)) {
    return {0.0};
  }
  const auto intervals = static_cast<std::size_t>(std::max(1.0, std::ceil(duration * sample_rate - 1e-9)));
  std::vector<double> times(intervals + 1);
  const double dt = duration / static_cast<double>(intervals);
  for (std::size_t k = 0; k < intervals; ++k) {
    times[k] = dt * static_cast<double>(k);
  }
  times[intervals] = duration;
  return times;
}

inline TrapezoidProfile<double> profile_of(const ExperimentConfig& cfg) {
  return plan_trapezoid(cfg.x0, cfg.xf, cfg.v_max, cfg.a_max);
}

inline std::vector<SimulationRecord> run_simulation(const ExperimentConfig& cfg, double rho) {
  validate(cfg);
  const GearReductions<double> gears = reductions_from_rho(rho);
  const auto& geo = cfg.geometry;
  for (double x : {cfg.x0, cfg.xf}) {
    if (!(x >= geo.stroke_min() && x <= geo.stroke_max())) {
      throw OutOfStrokeError("slider endpoint " + detail::format_number(x) + " m is outside the mechanism stroke [" +
                             detail::format_number(geo.stroke_min()) + ", " +
                             detail::format_number(geo.stroke_max()) + "] m");
    }
  }
  const TrapezoidProfile<double> profile = profile_of(cfg);
  const std::vector<double> times = sample_times(profile.duration(), cfg.sample_rate);

  std::vector<SimulationRecord> records;
  records.reserve(times.size());
  for (double t : times) {
    const SliderSample<double> s = sample(profile, t);
    const JointState<double> joint = joint_trajectory(profile, geo, t);
    const double i_joint = effective_inertia(geo, cfg.masses, joint.theta);
    const InputMotion<double> motion = allocate(joint, gears, cfg.policy);
    const InertialTorques<double> torques = inertial_torques(motion, rho, i_joint, cfg.motors);

    SimulationRecord r;
    r.t = t;
    r.x = s.x;
    r.x_dot = s.x_dot;
    r.x_ddot = s.x_ddot;
    r.theta = joint.theta;
    r.theta_dot = joint.theta_dot;
    r.theta_ddot = joint.theta_ddot;
    r.i_joint = i_joint;
    r.mu = coupling_mu(rho, i_joint);
    r.phi_v_ddot = motion.phi_v_ddot;
    r.phi_f_ddot = motion.phi_f_ddot;
    r.tau_v_inertial = torques.tau_v_inertial;
    r.tau_f_inertial = torques.tau_f_inertial;
    r.coupling_on_v = torques.coupling_on_v;
    r.coupling_on_f = torques.coupling_on_f;
    records.push_back(r);
  }
  return records;
}

inline SweepRow summarize(double rho, std::span<const SimulationRecord> records) {
  SweepRow row;
  row.rho = rho;
  double mu_sum = 0.0;
  for (const auto& r : records) {
    row.peak_coupling_torque =
        std::max({row.peak_coupling_torque, std::abs(r.coupling_on_v), std::abs(r.coupling_on_f)});
    row.peak_mu = std::max(row.peak_mu, std::abs(r.mu));
    mu_sum += std::abs(r.mu);
    row.peak_tau_v = std::max(row.peak_tau_v, std::abs(r.tau_v_inertial));
    row.peak_tau_f = std::max(row.peak_tau_f, std::abs(r.tau_f_inertial));
  }
  if (!records.empty()) {
    row.mean_mu = mu_sum / static_cast<double>(records.size());
  }
  return row;
}

/// Runs every rho (concurrently) and returns the records of each run in the
/// order of `rhos`.
inline std::vector<std::vector<SimulationRecord>> run_sweep(const ExperimentConfig& cfg,
                                                            std::span<const double> rhos) {
  if (rhos.empty()) {
    throw ConfigError("rho sweep list must not be empty");
  }
  std::vector<std::future<std::vector<SimulationRecord>>> jobs;
  jobs.reserve(rhos.size());
  for (double rho : rhos) {
    jobs.push_back(std::async(std::launch::async, [&cfg, rho] { return run_simulation(cfg, rho); }));
  }
  std::vector<std::vector<SimulationRecord>> runs;
  runs.reserve(rhos.size());
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    try {
      runs.push_back(jobs[k].get());
    } catch (const std::exception& e) {
      throw SweepRunError(rhos[k], "rho = " + detail::format_number(rhos[k]) + ": " + e.what());
    }
  }
  return runs;
}

inline SweepSummary sweep_rho(const ExperimentConfig& cfg, std::span<const double> rhos) {
  const auto runs = run_sweep(cfg, rhos);
  SweepSummary summary;
  summary.policy = cfg.policy;
  summary.rows.reserve(runs.size());
  for (std::size_t k = 0; k < runs.size(); ++k) {
    summary.rows.push_back(summarize(rhos[k], runs[k]));
  }
  return summary;
}

}  // namespace pfva
