#pragma once

#include <string>
#include <vector>

#include "uavoff/binary.hpp"
#include "uavoff/channel.hpp"
#include "uavoff/error_model.hpp"
#include "uavoff/partial.hpp"
#include "uavoff/types.hpp"

namespace uavoff {

enum class Strategy {
  TotallyLocal,    // TL: everything on board, channel treated as unavailable
  TotallyOffload,  // TO: everything to the server
  OptimalBinary,   // BO: closed-form optimal offloading probability
  OptimalPartial,  // PO: closed-form optimal offloading ratio
  QualitySplit,    // PO_SPECIAL: Bad frames offloaded, Good frames local
};

inline const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::TotallyLocal: return "TL";
    case Strategy::TotallyOffload: return "TO";
    case Strategy::OptimalBinary: return "BO";
    case Strategy::OptimalPartial: return "PO";
    case Strategy::QualitySplit: return "PO_SPECIAL";
  }
  return "unknown";
}

inline Strategy parse_strategy(const std::string& name) {
  if (name == "TL") return Strategy::TotallyLocal;
  if (name == "TO") return Strategy::TotallyOffload;
  if (name == "BO") return Strategy::OptimalBinary;
  if (name == "PO") return Strategy::OptimalPartial;
  if (name == "PO_SPECIAL") return Strategy::QualitySplit;
  throw std::invalid_argument("strategy: unknown name '" + name +
                              "' (expected TL, TO, BO, PO or PO_SPECIAL)");
}

// One UAV with its task, hardware, uplink and data-quality model.
struct UavNode {
  TaskSpec task;
  UavProfile profile;
  LinkModel link;
  QualityErrorModel quality;
};

struct Scenario {
  std::vector<UavNode> uavs;
  MesProfile mes;
  Strategy strategy = Strategy::OptimalPartial;
  double error_margin = 0.1;  // eps_T slack below the local-only error; used
                              // to re-derive eps_T when eta is swept
};

inline void validate(const Scenario& sc) {
  detail::require(!sc.uavs.empty(), "uavs", "scenario needs at least one UAV");
  validate(sc.mes);
  detail::require(sc.mes.allocation.empty() || sc.mes.allocation.size() == sc.uavs.size(),
                  "allocation", "explicit allocation must list one f_i per UAV");
  for (const UavNode& node : sc.uavs) {
    validate(node.task);
    validate(node.profile);
    validate(node.link);
    validate(node.quality);
    detail::require(node.link.n == static_cast<int>(sc.uavs.size()), "n",
                    "each link must record the fleet size sharing the band");
  }
}

/// Equal split of the server budget; uses the whole budget by construction.
inline std::vector<double> allocate_mes(const MesProfile& mes, std::size_t n) {
  if (n == 0) return {};
  return std::vector<double>(n, mes.F / static_cast<double>(n));
}

/// Explicit per-UAV allocation when the scenario carries one, equal split
/// otherwise. Swapping in a proportional rule is a matter of filling
/// mes.allocation before the run.
inline std::vector<double> resolve_allocation(const Scenario& sc) {
  if (sc.mes.allocation.size() == sc.uavs.size() && !sc.mes.allocation.empty()) {
    return sc.mes.allocation;
  }
  return allocate_mes(sc.mes, sc.uavs.size());
}

struct OffloadDecision {
  Strategy strategy = Strategy::TotallyLocal;
  double decision_var = 0.0;  // mu or beta
  double expected_cost = 0.0;
  double avg_error = 0.0;
  double expected_delay = 0.0;
  bool error_feasible = false;  // avg_error <= eps_T
  bool delay_feasible = false;  // expected_delay <= sigma
  std::string case_tag;
};

struct StrategyReport {
  Strategy strategy = Strategy::TotallyLocal;
  std::vector<OffloadDecision> decisions;
  double total_cost = 0.0;
  double mean_error = 0.0;
  bool error_feasible = false;  // all UAVs within eps_T
  bool delay_feasible = false;  // all UAVs within sigma
};

/// Decision for a single UAV given its uplink rate and server share.
/// TL and TO report constraint violations in the flags instead of throwing;
/// the optimizing strategies propagate infeasibility.
inline OffloadDecision decide_uav(const UavNode& node, Strategy strategy, double rate,
                                  double f_i) {
  const EffectiveErrorRates eff = effective_error_rates(node.quality);
  OffloadDecision d;
  d.strategy = strategy;
  switch (strategy) {
    case Strategy::TotallyLocal: {
      d.decision_var = 0.0;
      d.expected_cost = local_cost_binary(node.task, node.profile, eff);
      d.avg_error = eff.fast;
      d.expected_delay = local_delay_binary(node.task, node.profile, eff);
      d.case_tag = "local";
      break;
    }
    case Strategy::TotallyOffload: {
      d.decision_var = 1.0;
      d.expected_cost = offload_cost_binary(node.task, node.profile, eff, rate, f_i);
      d.avg_error = eff.enhanced;
      d.expected_delay = offload_delay_binary(node.task, node.profile, eff, rate, f_i);
      d.case_tag = "offload";
      break;
    }
    case Strategy::OptimalBinary: {
      const BinaryCostBreakdown b = optimal_mu(node.task, node.profile, node.quality, rate, f_i);
      d.decision_var = b.mu_star;
      d.expected_cost = b.expected_cost;
      d.avg_error = b.avg_error;
      d.expected_delay =
          (1.0 - b.mu_star) * local_delay_binary(node.task, node.profile, eff) +
          b.mu_star * offload_delay_binary(node.task, node.profile, eff, rate, f_i);
      d.case_tag = (b.mu_star >= 1.0) ? "binary_full" : "binary_bound";
      break;
    }
    case Strategy::OptimalPartial: {
      const PartialCostBreakdown b = optimal_beta(node.task, node.profile, node.quality, rate, f_i);
      d.decision_var = b.beta_star;
      d.expected_cost = b.weighted_cost;
      d.avg_error = b.avg_error;
      d.expected_delay = b.total_delay;
      d.case_tag = to_string(b.case_tag);
      break;
    }
    case Strategy::QualitySplit: {
      const SpecialPartialResult r =
          optimal_beta_special(node.task, node.profile, node.quality, rate, f_i);
      d.decision_var = r.best.beta_star;
      d.expected_cost = r.best.weighted_cost;
      d.avg_error = r.best.avg_error;
      d.expected_delay = r.best.total_delay;
      d.case_tag = to_string(r.best.case_tag);
      break;
    }
  }
  d.error_feasible = d.avg_error <= node.quality.eps_T + 1e-12;
  d.delay_feasible = d.expected_delay <= node.task.sigma;
  return d;
}

/// Evaluate the scenario's strategy for the whole fleet.
inline StrategyReport run_strategy(const Scenario& sc) {
  validate(sc);
  const std::vector<double> allocation = resolve_allocation(sc);
  for (std::size_t i = 0; i < sc.uavs.size(); ++i) {
    validate_penalty_bound(sc.uavs[i].task, sc.uavs[i].profile, allocation[i]);
  }
  StrategyReport report;
  report.strategy = sc.strategy;
  report.decisions.reserve(sc.uavs.size());
  report.error_feasible = true;
  report.delay_feasible = true;
  for (std::size_t i = 0; i < sc.uavs.size(); ++i) {
    const UavNode& node = sc.uavs[i];
    const double rate = data_rate(node.link, node.profile);
    OffloadDecision d = decide_uav(node, sc.strategy, rate, allocation[i]);
    report.total_cost += d.expected_cost;
    report.mean_error += d.avg_error;
    report.error_feasible = report.error_feasible && d.error_feasible;
    report.delay_feasible = report.delay_feasible && d.delay_feasible;
    report.decisions.push_back(std::move(d));
  }
  report.mean_error /= static_cast<double>(sc.uavs.size());
  return report;
}

}  // namespace uavoff
