#pragma once

#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include "uavoff/config.hpp"
#include "uavoff/fleet.hpp"
#include "uavoff/format.hpp"

namespace uavoff {

// Sweep execution. One row per (parameter value, strategy), deterministic
// order, CSV schema:
//   param_value,strategy,total_cost,mean_error,decision_var,case_tag,
//   error_feasible,delay_feasible
// Per-UAV fields are ';'-joined inside their column. Points where an
// optimizer reports infeasibility become flagged rows; the sweep never
// aborts.

struct SweepRow {
  double param_value = 0.0;
  std::string strategy;  // TL/TO/BO/PO/PO_SPECIAL, or PO_FIXED for beta sweeps
  double total_cost = std::numeric_limits<double>::quiet_NaN();
  double mean_error = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> decision_vars;
  std::vector<std::string> case_tags;
  bool error_feasible = false;
  bool delay_feasible = false;
  bool evaluated = false;  // false -> infeasible point, numeric columns are nan
};

namespace detail {

inline Scenario apply_parameter(Scenario sc, SweepParameter::Kind kind, double value) {
  using Kind = SweepParameter::Kind;
  switch (kind) {
    case Kind::Gamma:
      for (UavNode& u : sc.uavs) u.task.gamma = value;
      break;
    case Kind::Beta:
      break;  // handled by the fixed-ratio evaluation below
    case Kind::MesFrequency:
      sc.mes.F = value;
      sc.mes.allocation.clear();  // re-split the new budget
      break;
    case Kind::FleetSize: {
      const int n = static_cast<int>(value);
      if (value < 1 || static_cast<double>(n) != value) {
        throw std::invalid_argument("n: fleet-size sweep values must be positive integers");
      }
      // Grow/shrink by replicating the first UAV's setup.
      const UavNode tmpl = sc.uavs.front();
      sc.uavs.assign(static_cast<std::size_t>(n), tmpl);
      for (UavNode& u : sc.uavs) u.link.n = n;
      sc.mes.allocation.clear();
      break;
    }
    case Kind::Eta:
      for (UavNode& u : sc.uavs) {
        u.quality.eta = value;
        // The threshold tracks the local-only error at a fixed margin.
        u.quality.eps_T = effective_error_rates(u.quality).fast - sc.error_margin;
      }
      break;
    case Kind::ErrorThreshold:
      for (UavNode& u : sc.uavs) u.quality.eps_T = value;
      break;
    case Kind::Theta:
      for (UavNode& u : sc.uavs) u.profile.theta = value;
      break;
  }
  return sc;
}

// Fixed offloading ratio applied fleet-wide: the cost curve the optimum is
// validated against.
inline SweepRow evaluate_fixed_beta(const Scenario& sc, double beta) {
  SweepRow row;
  row.param_value = beta;
  row.strategy = "PO_FIXED";
  if (beta < 0.0 || beta > 1.0) {
    throw std::invalid_argument("beta: sweep values must lie in [0,1]");
  }
  validate(sc);
  const std::vector<double> allocation = resolve_allocation(sc);
  row.total_cost = 0.0;
  row.mean_error = 0.0;
  row.error_feasible = true;
  row.delay_feasible = true;
  for (std::size_t i = 0; i < sc.uavs.size(); ++i) {
    const UavNode& node = sc.uavs[i];
    const double rate = data_rate(node.link, node.profile);
    const PartialTotals totals =
        partial_total_cost(node.task, node.profile, node.quality, rate, allocation[i], beta);
    const double err = average_error(effective_error_rates(node.quality), beta);
    row.total_cost += totals.weighted_cost;
    row.mean_error += err;
    row.decision_vars.push_back(beta);
    row.case_tags.push_back("fixed");
    row.error_feasible = row.error_feasible && err <= node.quality.eps_T + 1e-12;
    row.delay_feasible = row.delay_feasible && totals.total_delay <= node.task.sigma;
  }
  row.mean_error /= static_cast<double>(sc.uavs.size());
  row.evaluated = true;
  return row;
}

inline SweepRow evaluate_strategy_row(const Scenario& sc, Strategy strategy, double value) {
  SweepRow row;
  row.param_value = value;
  row.strategy = to_string(strategy);
  Scenario run = sc;
  run.strategy = strategy;
  try {
    const StrategyReport report = run_strategy(run);
    row.total_cost = report.total_cost;
    row.mean_error = report.mean_error;
    row.error_feasible = report.error_feasible;
    row.delay_feasible = report.delay_feasible;
    for (const OffloadDecision& d : report.decisions) {
      row.decision_vars.push_back(d.decision_var);
      row.case_tags.push_back(d.case_tag);
    }
    row.evaluated = true;
  } catch (const InfeasibleThreshold&) {
    for (std::size_t i = 0; i < run.uavs.size(); ++i) row.case_tags.push_back("infeasible");
  } catch (const InfeasibleConfiguration&) {
    for (std::size_t i = 0; i < run.uavs.size(); ++i) row.case_tags.push_back("infeasible");
  }
  return row;
}

}  // namespace detail

inline std::vector<SweepRow> run_sweep(const Scenario& base, const SweepSpec& spec) {
  std::vector<SweepRow> rows;
  for (double value : spec.values) {
    if (spec.parameter == SweepParameter::Kind::Beta) {
      rows.push_back(detail::evaluate_fixed_beta(base, value));
      continue;
    }
    const Scenario point = detail::apply_parameter(base, spec.parameter, value);
    for (Strategy strategy : spec.strategies) {
      rows.push_back(detail::evaluate_strategy_row(point, strategy, value));
    }
  }
  return rows;
}

inline constexpr const char* kSweepCsvHeader =
    "param_value,strategy,total_cost,mean_error,decision_var,case_tag,"
    "error_feasible,delay_feasible";

inline std::string to_csv(const std::vector<SweepRow>& rows) {
  std::string out(kSweepCsvHeader);
  out += '\n';
  for (const SweepRow& row : rows) {
    out += format_double(row.param_value);
    out += ',';
    out += row.strategy;
    out += ',';
    out += format_double(row.total_cost);
    out += ',';
    out += format_double(row.mean_error);
    out += ',';
    if (row.evaluated) {
      for (std::size_t i = 0; i < row.decision_vars.size(); ++i) {
        if (i) out += ';';
        out += format_double(row.decision_vars[i]);
      }
    } else {
      out += "nan";
    }
    out += ',';
    for (std::size_t i = 0; i < row.case_tags.size(); ++i) {
      if (i) out += ';';
      out += row.case_tags[i];
    }
    out += ',';
    out += row.error_feasible ? '1' : '0';
    out += ',';
    out += row.delay_feasible ? '1' : '0';
    out += '\n';
  }
  return out;
}

/// Sidecar describing exactly how a CSV was produced.
inline nlohmann::json sweep_metadata(const Scenario& base, const SweepSpec& spec) {
  nlohmann::json strategies = nlohmann::json::array();
  for (Strategy s : spec.strategies) strategies.push_back(to_string(s));
  return {{"tool", "uavoff"},
          {"version", kToolVersion},
          {"parameter", to_string(spec.parameter)},
          {"values", spec.values},
          {"strategies", strategies},
          {"scenario", resolved_scenario_json(base)}};
}

inline void write_sweep_outputs(const Scenario& base, const SweepSpec& spec,
                                const std::vector<SweepRow>& rows, const std::string& csv_path) {
  {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw std::runtime_error("output: cannot write '" + csv_path + "'");
    out << to_csv(rows);
  }
  {
    const std::string meta_path = csv_path + ".meta.json";
    std::ofstream out(meta_path, std::ios::binary);
    if (!out) throw std::runtime_error("output: cannot write '" + meta_path + "'");
    out << sweep_metadata(base, spec).dump(2) << '\n';
  }
}

}  // namespace uavoff
