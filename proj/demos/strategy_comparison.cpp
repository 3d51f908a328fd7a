// Compares the five offloading strategies on the stock two-UAV scenario.

#include <cstdio>

#include "uavoff/config.hpp"
#include "uavoff/sweep.hpp"

using namespace uavoff;

int main() {
  Scenario sc = default_scenario();
  std::printf("%-12s %12s %12s %10s\n", "strategy", "total cost", "mean error", "decision");
  for (Strategy s : {Strategy::TotallyLocal, Strategy::TotallyOffload, Strategy::OptimalBinary,
                     Strategy::OptimalPartial, Strategy::QualitySplit}) {
    sc.strategy = s;
    const StrategyReport r = run_strategy(sc);
    std::printf("%-12s %12.6f %12.6f %10.4f%s\n", to_string(s), r.total_cost, r.mean_error,
                r.decisions[0].decision_var, r.error_feasible ? "" : "  (error violated)");
  }
  return 0;
}
