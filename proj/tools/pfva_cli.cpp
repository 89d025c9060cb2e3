// pfva: command-line driver for coupling curves, single runs and rho sweeps.
//
//   pfva curve    [--rho-min 0.01] [--rho-max 100] [--samples 1001] [--spacing log] [--inertia 1]
//   pfva simulate --rho 5 [--config cfg] [--policy velocity_only] [--out run.csv]
//   pfva sweep    [--rhos 5,10,15] [--config cfg] [--policy min_norm] [--out sweep.csv]
//
// Output goes to --out, else the config's `output` key, else stdout.
#include <pfva/pfva.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

struct CommonOptions {
  std::string config_path;
  std::string out_path;
  std::string policy;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--config", opts.config_path, "experiment config file (key = value)");
  cmd->add_option("--out", opts.out_path, "output CSV path (default: config 'output', else stdout)");
  cmd->add_option("--policy", opts.policy, "allocation policy")
      ->check(CLI::IsMember({"velocity_only", "force_only", "min_norm"}));
}

pfva::ExperimentConfig resolve_config(const CommonOptions& opts) {
  pfva::ExperimentConfig cfg;
  if (!opts.config_path.empty()) {
    cfg = pfva::load_config(opts.config_path);
  }
  if (!opts.policy.empty()) {
    cfg.policy = *pfva::parse_policy(opts.policy);
  }
  if (!opts.out_path.empty()) {
    cfg.output = opts.out_path;
  }
  return cfg;
}

template <typename Writer>
void write_output(const std::string& path, Writer&& writer) {
  if (path.empty()) {
    writer(std::cout);
    std::cout.flush();
  } else {
    pfva::detail::write_file(path, writer);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parallel force/velocity actuator coupling analysis"};
  app.require_subcommand(1);

  CommonOptions common;

  auto* curve = app.add_subcommand("curve", "mu and d(mu)/d(rho) against rho");
  double rho_min = 0.01;
  double rho_max = 100.0;
  std::size_t samples = 1001;
  double inertia = 1.0;
  std::string spacing = "log";
  curve->add_option("--rho-min", rho_min, "lower end of the rho range")->capture_default_str();
  curve->add_option("--rho-max", rho_max, "upper end of the rho range")->capture_default_str();
  curve->add_option("--samples", samples, "number of rho samples")->capture_default_str();
  curve->add_option("--inertia", inertia, "joint reflected inertia (kg m^2)")->capture_default_str();
  curve->add_option("--spacing", spacing, "rho spacing")
      ->check(CLI::IsMember({"linear", "log"}))
      ->capture_default_str();
  add_common(curve, common);

  auto* simulate = app.add_subcommand("simulate", "one crank-slider run at a fixed rho");
  std::optional<double> rho;
  simulate->add_option("--rho", rho, "relative scale factor (default: config 'rho')");
  add_common(simulate, common);

  auto* sweep = app.add_subcommand("sweep", "crank-slider runs over a list of rho values");
  std::vector<double> rhos;
  sweep->add_option("--rhos", rhos, "rho values (default: config 'rhos')")->delimiter(',');
  add_common(sweep, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    pfva::ExperimentConfig cfg = resolve_config(common);

    if (*curve) {
      const auto sp = spacing == "log" ? pfva::Spacing::log : pfva::Spacing::linear;
      const auto rows = pfva::mu_curve(rho_min, rho_max, samples, inertia, sp);
      write_output(cfg.output, [&](std::ostream& out) { pfva::write_csv(out, rows); });
    } else if (*simulate) {
      const auto records = pfva::run_simulation(cfg, rho.value_or(cfg.rho));
      write_output(cfg.output, [&](std::ostream& out) { pfva::write_csv(out, records); });
    } else if (*sweep) {
      if (!rhos.empty()) {
        cfg.rhos = rhos;
        pfva::validate(cfg);
      }
      const auto runs = pfva::run_sweep(cfg, cfg.rhos);
      pfva::SweepSummary summary;
      summary.policy = cfg.policy;
      for (std::size_t k = 0; k < runs.size(); ++k) {
        summary.rows.push_back(pfva::summarize(cfg.rhos[k], runs[k]));
        if (!cfg.output.empty()) {
          pfva::emit_csv(runs[k], pfva::run_csv_path(cfg.output, cfg.policy, cfg.rhos[k]));
        }
      }
      write_output(cfg.output, [&](std::ostream& out) { pfva::write_csv(out, summary); });
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "pfva: error: %s\n", e.what());
    return 1;
  }
  return 0;
}
