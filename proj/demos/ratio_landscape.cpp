// Prints the partial-offloading cost landscape over the ratio for two output
// scales, marking where the closed form puts the optimum.

#include <cstdio>

#include "uavoff/config.hpp"
#include "uavoff/partial.hpp"

using namespace uavoff;

int main() {
  const Scenario sc = default_scenario();
  const UavNode& node = sc.uavs.front();
  const double rate = data_rate(node.link, node.profile);
  const double f_i = sc.mes.F / static_cast<double>(sc.uavs.size());

  for (double gamma : {0.7, 30.0}) {
    TaskSpec t = node.task;
    t.gamma = gamma;
    const PartialCostBreakdown best = optimal_beta(t, node.profile, node.quality, rate, f_i);
    std::printf("gamma = %.1f  (optimum beta* = %.4f, %s)\n", gamma, best.beta_star,
                to_string(best.case_tag));
    for (int k = 0; k <= 10; ++k) {
      const double beta = k / 10.0;
      const PartialTotals totals =
          partial_total_cost(t, node.profile, node.quality, rate, f_i, beta);
      const double err = average_error(effective_error_rates(node.quality), beta);
      std::printf("  beta %.1f  cost %8.4f  error %.4f%s\n", beta, totals.weighted_cost, err,
                  err > node.quality.eps_T ? "  (infeasible)" : "");
    }
  }
  return 0;
}
