// CSV output for simulation records, sweep summaries and mu curves.
//
// One header row naming the columns, then one row per item. Numbers are
// written with 17 significant digits (round-trip exact); rows end in '\n'.
#pragma once

#include <pfva/coupling.hpp>
#include <pfva/errors.hpp>
#include <pfva/simulation.hpp>

#include <array>
#include <charconv>
#include <fstream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace pfva {

inline constexpr std::array<std::string_view, 15> kRecordColumns{
    "t",         "x",          "x_dot",      "x_ddot",         "theta",
    "theta_dot", "theta_ddot", "i_joint",    "mu",             "phi_v_ddot",
    "phi_f_ddot", "tau_v_inertial", "tau_f_inertial", "coupling_on_v", "coupling_on_f"};

inline constexpr std::array<std::string_view, 6> kSweepColumns{
    "rho", "peak_coupling_torque", "peak_mu", "mean_mu", "peak_tau_v", "peak_tau_f"};

inline constexpr std::array<std::string_view, 3> kCurveColumns{"rho", "mu", "dmu_drho"};

namespace detail {

inline void write_number(std::ostream& out, double v) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  out.write(buf.data(), end - buf.data());
}

template <std::size_t N>
void write_row(std::ostream& out, const std::array<double, N>& values) {
  for (std::size_t k = 0; k < N; ++k) {
    if (k) out.put(',');
    write_number(out, values[k]);
  }
  out.put('\n');
}

template <std::size_t N>
void write_header(std::ostream& out, const std::array<std::string_view, N>& names) {
  for (std::size_t k = 0; k < N; ++k) {
    if (k) out.put(',');
    out << names[k];
  }
  out.put('\n');
}

inline std::array<double, 15> fields(const SimulationRecord& r) {
  return {r.t,         r.x,          r.x_dot,          r.x_ddot,         r.theta,
          r.theta_dot, r.theta_ddot, r.i_joint,        r.mu,             r.phi_v_ddot,
          r.phi_f_ddot, r.tau_v_inertial, r.tau_f_inertial, r.coupling_on_v, r.coupling_on_f};
}

inline std::array<double, 6> fields(const SweepRow& r) {
  return {r.rho, r.peak_coupling_torque, r.peak_mu, r.mean_mu, r.peak_tau_v, r.peak_tau_f};
}

inline std::array<double, 3> fields(const MuCurveRow<double>& r) { return {r.rho, r.mu, r.dmu_drho}; }

template <typename Writer>
void write_file(const std::string& path, Writer&& writer) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  writer(out);
  out.flush();
  if (!out) {
    throw IoError("write to '" + path + "' failed");
  }
}

template <std::size_t N>
std::vector<std::array<double, N>> read_table(std::istream& in, const std::array<std::string_view, N>& names,
                                              const std::string& source) {
  std::string line;
  if (!std::getline(in, line)) {
    throw IoError(source + ": missing CSV header");
  }
  std::ostringstream expected;
  write_header(expected, names);
  if (line + '\n' != expected.str()) {
    throw IoError(source + ": unexpected CSV header '" + line + "'");
  }
  std::vector<std::array<double, N>> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    std::array<double, N> row{};
    std::string_view rest = line;
    for (std::size_t k = 0; k < N; ++k) {
      const auto comma = rest.find(',');
      const bool last = k + 1 == N;
      if (last != (comma == std::string_view::npos)) {
        throw IoError(source + ": line " + std::to_string(line_no) + " has the wrong number of fields");
      }
      const std::string_view cell = rest.substr(0, comma);
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), row[k]);
      if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
        throw IoError(source + ": line " + std::to_string(line_no) + ": bad number '" + std::string(cell) + "'");
      }
      if (!last) rest.remove_prefix(comma + 1);
    }
    rows.push_back(row);
  }
  return rows;
}

template <std::size_t N>
std::vector<std::array<double, N>> read_table_file(const std::string& path,
                                                   const std::array<std::string_view, N>& names) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path + "' for reading");
  }
  return read_table(in, names, path);
}

}  // namespace detail

inline void write_csv(std::ostream& out, std::span<const SimulationRecord> records) {
  detail::write_header(out, kRecordColumns);
  for (const auto& r : records) detail::write_row(out, detail::fields(r));
}

inline void write_csv(std::ostream& out, const SweepSummary& summary) {
  detail::write_header(out, kSweepColumns);
  for (const auto& r : summary.rows) detail::write_row(out, detail::fields(r));
}

inline void write_csv(std::ostream& out, std::span<const MuCurveRow<double>> curve) {
  detail::write_header(out, kCurveColumns);
  for (const auto& r : curve) detail::write_row(out, detail::fields(r));
}

inline void emit_csv(std::span<const SimulationRecord> records, const std::string& path) {
  detail::write_file(path, [&](std::ostream& out) { write_csv(out, records); });
}

inline void emit_csv(const SweepSummary& summary, const std::string& path) {
  detail::write_file(path, [&](std::ostream& out) { write_csv(out, summary); });
}

inline void emit_csv(std::span<const MuCurveRow<double>> curve, const std::string& path) {
  detail::write_file(path, [&](std::ostream& out) { write_csv(out, curve); });
}

inline std::vector<SimulationRecord> read_records_csv(const std::string& path) {
  std::vector<SimulationRecord> out;
  for (const auto& f : detail::read_table_file(path, kRecordColumns)) {
    out.push_back({f[0], f[1], f[2], f[3], f[4], f[5], f[6], f[7], f[8], f[9], f[10], f[11], f[12], f[13], f[14]});
  }
  return out;
}

inline std::vector<SweepRow> read_sweep_csv(const std::string& path) {
  std::vector<SweepRow> out;
  for (const auto& f : detail::read_table_file(path, kSweepColumns)) {
    out.push_back({f[0], f[1], f[2], f[3], f[4], f[5]});
  }
  return out;
}

/// File name used for one run of a sweep whose summary goes to
/// `summary_path`: "<stem>_<policy>_rho<rho>.csv" next to it.
inline std::string run_csv_path(const std::string& summary_path, AllocationPolicy policy, double rho) {
  std::string stem = summary_path;
  if (stem.size() > 4 && stem.compare(stem.size() - 4, 4, ".csv") == 0) {
    stem.resize(stem.size() - 4);
  }
  return stem + "_" + std::string(to_string(policy)) + "_rho" + detail::format_number(rho) + ".csv";
}

}  // namespace pfva
