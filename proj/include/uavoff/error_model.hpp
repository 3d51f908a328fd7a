#pragma once

#include <string>

#include "uavoff/types.hpp"

namespace uavoff {

// Quality-weighted average error of each inference stage. A Bad frame fails
// with probability 1 on board and with eps_H at the server; a Good frame
// fails with eps_L on board and never at the server.
struct EffectiveErrorRates {
  double fast = 0.0;      // on-board stage: (1-eta)*eps_L + eta
  double enhanced = 0.0;  // server stage:   eta*eps_H
};

inline EffectiveErrorRates effective_error_rates(const QualityErrorModel& q) {
  return {(1.0 - q.eta) * q.eps_L + q.eta, q.eta * q.eps_H};
}

/// Mean error when a fraction x of the work lands at the server.
inline double average_error(const EffectiveErrorRates& eff, double x) {
  return eff.fast - x * (eff.fast - eff.enhanced);
}

/// Smallest offloaded fraction that keeps the average error within eps_T.
/// Valid (and in [0,1]) only for eps_T between the two effective rates.
inline double min_feasible_offload(const EffectiveErrorRates& eff, double eps_T) {
  if (eps_T < eff.enhanced || eps_T > eff.fast) {
    throw InfeasibleThreshold("eps_T=" + std::to_string(eps_T) +
                              " outside the attainable error range [" +
                              std::to_string(eff.enhanced) + ", " + std::to_string(eff.fast) + "]");
  }
  return (eff.fast - eps_T) / (eff.fast - eff.enhanced);
}

/// Default threshold rule: a fixed margin below the local-only error.
inline double error_threshold_default(const QualityErrorModel& q, double margin) {
  const EffectiveErrorRates eff = effective_error_rates(q);
  if (!(margin > 0.0) || !(margin < eff.fast - eff.enhanced)) {
    throw InfeasibleThreshold("margin=" + std::to_string(margin) +
                              " must lie strictly inside (0, " +
                              std::to_string(eff.fast - eff.enhanced) + ")");
  }
  return eff.fast - margin;
}

}  // namespace uavoff
