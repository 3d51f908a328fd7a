// tools/main.cpp
//
// Command-line front end for the UAV edge-offloading cost library.
//
// Subcommands:
//   defaults   print the stock configuration as JSON
//   optimize   solve one scenario and print per-UAV decision breakdowns
//   sweep      run every sweep in the config, emitting CSV + metadata
//   certify    randomized closed-form vs brute-force certification
//
// Usage:
//   uavoff defaults > config.json
//   uavoff optimize --config config.json
//   uavoff sweep --config config.json [--out-dir results/]
//   uavoff certify [--config config.json] --draws 1000 --seed 1
//                  [--resolution 1e-4] [--output report.txt]
//
// Config schema (all scenario keys optional; omitted ones take the stock
// values; see `defaults` for the full list):
// {
//   "scenario": { "n": 2, "gamma": 7.0, "theta": 0.5, "eta": 0.5,
//                 "F_hz": 1e10, "h0_db": -50, "e": 0.1, "strategy": "PO" },
//   "sweeps":   [ { "parameter": "gamma", "start": 1, "stop": 30, "step": 1,
//                   "strategies": ["TL","TO","BO","PO","PO_SPECIAL"],
//                   "output": "gamma_sweep.csv" } ]
// }
//
// Exit codes: 0 success, 1 config error, 2 certification failure,
//             3 infeasible scenario (no constraint-satisfying optimum).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <CLI11.hpp>

#include "uavoff/uavoff.hpp"

namespace {

using namespace uavoff;

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitCertifyFailure = 2;
constexpr int kExitInfeasible = 3;

AppConfig load_or_default(const std::string& config_path) {
  if (config_path.empty()) return parse_config(default_config_json());
  return load_config(config_path);
}

void print_decision_header(const Scenario& sc) {
  std::printf("strategy: %s | fleet: %zu UAVs | F: %s Hz | e-margin: %s\n",
              to_string(sc.strategy), sc.uavs.size(), format_double(sc.mes.F).c_str(),
              format_double(sc.error_margin).c_str());
}

int run_optimize(const std::string& config_path) {
  const AppConfig cfg = load_or_default(config_path);
  const Scenario& sc = cfg.scenario;
  print_decision_header(sc);

  const StrategyReport report = run_strategy(sc);
  const std::vector<double> allocation = resolve_allocation(sc);
  for (std::size_t i = 0; i < sc.uavs.size(); ++i) {
    const UavNode& node = sc.uavs[i];
    const OffloadDecision& d = report.decisions[i];
    const double rate = data_rate(node.link, node.profile);
    std::printf("uav %zu: rate %.4g bit/s | f_i %.4g Hz\n", i, rate, allocation[i]);
    std::printf("  decision %s (%s) | cost %.9g | error %.9g | delay %.4g s | %s%s\n",
                format_double(d.decision_var).c_str(), d.case_tag.c_str(), d.expected_cost,
                d.avg_error, d.expected_delay, d.error_feasible ? "error-ok" : "ERROR-VIOLATED",
                d.delay_feasible ? "" : " DELAY-VIOLATED");
    if (sc.strategy == Strategy::OptimalBinary) {
      const BinaryCostBreakdown b =
          optimal_mu(node.task, node.profile, node.quality, rate, allocation[i]);
      std::printf("  local %.9g | offload %.9g | delta %.9g | gamma_B %.6g | mu_min %.6g\n",
                  b.local_cost, b.offload_cost, b.delta, b.gamma_threshold, b.mu_min);
    } else if (sc.strategy == Strategy::OptimalPartial &&
               node.profile.theta > 0.0 && node.profile.theta < 1.0) {
      const Case3Thresholds th =
          case3_thresholds(node.task, node.profile, node.quality, rate, allocation[i]);
      const PartialCostBreakdown b =
          optimal_beta(node.task, node.profile, node.quality, rate, allocation[i]);
      std::printf("  gamma_t1 %.6g | gamma_t2 %.6g | beta_hat %.6g | beta_min %.6g\n",
                  th.gamma_t1, th.gamma_t2, b.beta_hat, b.beta_min);
    } else if (sc.strategy == Strategy::QualitySplit) {
      const SpecialPartialResult r =
          optimal_beta_special(node.task, node.profile, node.quality, rate, allocation[i]);
      std::printf("  quality point beta=%.6g: cost %.9g, error %.6g%s\n", r.quality_beta,
                  r.quality_cost, r.quality_error,
                  r.quality_error_feasible ? "" : " (violates the threshold)");
    }
  }
  std::printf("total cost %.9g | mean error %.9g | %s%s\n", report.total_cost, report.mean_error,
              report.error_feasible ? "error-ok" : "ERROR-VIOLATED",
              report.delay_feasible ? "" : " DELAY-VIOLATED");
  return kExitOk;
}

int run_sweeps(const std::string& config_path, const std::string& out_dir) {
  const AppConfig cfg = load_or_default(config_path);
  if (cfg.sweeps.empty()) {
    std::fprintf(stderr, "config: no sweeps defined; add a \"sweeps\" section\n");
    return kExitConfigError;
  }
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  for (const SweepSpec& spec : cfg.sweeps) {
    const auto rows = run_sweep(cfg.scenario, spec);
    std::string path = spec.output;
    if (!out_dir.empty()) path = out_dir + "/" + path;
    write_sweep_outputs(cfg.scenario, spec, rows, path);
    long flagged = 0;
    for (const SweepRow& row : rows) flagged += row.evaluated ? 0 : 1;
    std::printf("%s: %zu rows (%ld infeasible-flagged) -> %s\n", to_string(spec.parameter),
                rows.size(), flagged, path.c_str());
  }
  return kExitOk;
}

int run_certify(const std::string& config_path, long draws, std::uint64_t seed, double resolution,
                const std::string& output) {
  const AppConfig cfg = load_or_default(config_path);
  CertifyOptions opt;
  opt.draws = draws;
  opt.seed = seed;
  opt.resolution = resolution;
  const CertifyReport report = certify(cfg.scenario, opt);
  const std::string text = report.to_text();
  if (output.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::fprintf(stderr, "output: cannot write '%s'\n", output.c_str());
      return kExitConfigError;
    }
    out << text;
  }
  return report.ok() ? kExitOk : kExitCertifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"UAV edge-offloading cost optimizer"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --config appear after the subcommand name

  std::string config_path;
  app.add_option("--config,-c", config_path, "JSON config file (stock values when omitted)");

  CLI::App* defaults_cmd = app.add_subcommand("defaults", "print the stock configuration");
  CLI::App* optimize_cmd = app.add_subcommand("optimize", "solve one scenario");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "run the configured parameter sweeps");
  std::string out_dir;
  sweep_cmd->add_option("--out-dir", out_dir, "directory prefix for the CSV outputs");

  CLI::App* certify_cmd =
      app.add_subcommand("certify", "randomized closed-form vs oracle certification");
  long draws = 1000;
  std::uint64_t seed = 1;
  double resolution = 1e-4;
  std::string report_path;
  certify_cmd->add_option("--draws", draws, "number of randomized draws");
  certify_cmd->add_option("--seed", seed, "random seed");
  certify_cmd->add_option("--resolution", resolution, "oracle grid step");
  certify_cmd->add_option("--output,-o", report_path, "write the report here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (defaults_cmd->parsed()) {
      std::printf("%s\n", default_config_json().dump(2).c_str());
      return kExitOk;
    }
    if (optimize_cmd->parsed()) return run_optimize(config_path);
    if (sweep_cmd->parsed()) return run_sweeps(config_path, out_dir);
    if (certify_cmd->parsed()) return run_certify(config_path, draws, seed, resolution,
                                                  report_path);
  } catch (const InfeasibleThreshold& e) {
    std::fprintf(stderr, "infeasible: %s\n", e.what());
    return kExitInfeasible;
  } catch (const InfeasibleConfiguration& e) {
    std::fprintf(stderr, "infeasible: %s\n", e.what());
    return kExitInfeasible;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfigError;
  }
  return kExitOk;
}
