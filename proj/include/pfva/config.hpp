// Experiment configuration and its plain-text `key = value` format.
//
//   # comment
//   crank_r   = 0.15
//   rhos      = 5, 10, 15
//   policy    = velocity_only
//
// Every key is optional and falls back to the defaults below. Unknown or
// repeated keys are errors.
#pragma once

#include <pfva/coupling.hpp>
#include <pfva/dynamics.hpp>
#include <pfva/errors.hpp>
#include <pfva/mechanism.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace pfva {

struct ExperimentConfig {
  CrankSliderGeometry<double> geometry{};
  MechanismMasses<double> masses{};
  MotorInertias<double> motors{1e-4, 1e-4};

  // Slider endpoints (m) and trapezoid limits.
  double x0 = 0.3263;
  double xf = 0.5873;
  double v_max = 0.3;
  double a_max = 1.0;

  double sample_rate = 1000.0;  // Hz

  double rho = 5.0;
  std::vector<double> rhos{5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15};

  AllocationPolicy policy = AllocationPolicy::velocity_only;
  std::string output;
};

namespace detail {

/// Shortest decimal text that reads back to exactly v.
inline std::string format_number(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline double parse_number(std::string_view text, std::string_view key) {
  text = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw ConfigError("config key '" + std::string(key) + "': not a finite number: '" + std::string(text) + "'");
  }
  return value;
}

inline std::vector<double> parse_number_list(std::string_view text, std::string_view key) {
  std::vector<double> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_number(text.substr(0, comma), key));
    if (comma == std::string_view::npos) {
      break;
    }
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace detail

/// Throws ConfigError naming the first offending field.
inline void validate(const ExperimentConfig& cfg) {
  auto fail = [](const std::string& what) { throw ConfigError("invalid config: " + what); };
  if (!(cfg.geometry.crank_r > 0.0)) fail("crank_r must be positive");
  if (!(cfg.geometry.coupler_l > cfg.geometry.crank_r)) fail("coupler_l must exceed crank_r");
  if (!(cfg.masses.i_crank >= 0.0)) fail("i_crank must be nonnegative");
  if (!(cfg.masses.m_coupler >= 0.0)) fail("m_coupler must be nonnegative");
  if (!(cfg.masses.m_slider >= 0.0)) fail("m_slider must be nonnegative");
  if (!(cfg.motors.i_mv >= 0.0)) fail("i_mv must be nonnegative");
  if (!(cfg.motors.i_mf >= 0.0)) fail("i_mf must be nonnegative");
  if (!(cfg.v_max > 0.0)) fail("v_max must be positive");
  if (!(cfg.a_max > 0.0)) fail("a_max must be positive");
  if (!(cfg.sample_rate > 0.0)) fail("sample_rate must be positive");
  if (cfg.rho == -1.0) fail("rho must not be -1");
  if (cfg.rhos.empty()) fail("rhos must not be empty");
  for (double r : cfg.rhos) {
    if (r == -1.0) fail("rhos must not contain -1");
  }
}

inline ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::set<std::string, std::less<>> seen;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = detail::trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    const std::string where = "config line " + std::to_string(line_no);
    if (eq == std::string_view::npos) {
      throw ConfigError(where + ": expected 'key = value'");
    }
    const std::string key(detail::trim(line.substr(0, eq)));
    const std::string_view value = detail::trim(line.substr(eq + 1));
    if (!seen.insert(key).second) {
      throw ConfigError(where + ": duplicate key '" + key + "'");
    }

    auto num = [&] { return detail::parse_number(value, key); };
    if (key == "crank_r") cfg.geometry.crank_r = num();
    else if (key == "coupler_l") cfg.geometry.coupler_l = num();
    else if (key == "i_crank") cfg.masses.i_crank = num();
    else if (key == "m_coupler") cfg.masses.m_coupler = num();
    else if (key == "m_slider") cfg.masses.m_slider = num();
    else if (key == "i_mv") cfg.motors.i_mv = num();
    else if (key == "i_mf") cfg.motors.i_mf = num();
    else if (key == "x0") cfg.x0 = num();
    else if (key == "xf") cfg.xf = num();
    else if (key == "v_max") cfg.v_max = num();
    else if (key == "a_max") cfg.a_max = num();
    else if (key == "sample_rate") cfg.sample_rate = num();
    else if (key == "rho") cfg.rho = num();
    else if (key == "rhos") cfg.rhos = detail::parse_number_list(value, key);
    else if (key == "policy") {
      const auto p = parse_policy(value);
      if (!p) {
        throw ConfigError(where + ": unknown policy '" + std::string(value) + "'");
      }
      cfg.policy = *p;
    } else if (key == "output") cfg.output = std::string(value);
    else {
      throw ConfigError(where + ": unknown key '" + key + "'");
    }
  }
  validate(cfg);
  return cfg;
}

inline ExperimentConfig parse_config(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_config(in);
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open config file '" + path + "'");
  }
  try {
    return parse_config(in);
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

}  // namespace pfva
