#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "uavoff/error_model.hpp"
#include "uavoff/types.hpp"

namespace uavoff {

// Binary offloading: each task is executed wholly on board or wholly at the
// server; the decision variable is the offloading probability mu in [0,1].
// The expected cost O(mu) = O_l + mu*(O_o - O_l) is affine, so the optimum
// sits at an endpoint of the feasible interval [mu_min, 1].

struct BinaryCostBreakdown {
  double local_cost = 0.0;       // O_l, weighted delay+energy of local execution
  double offload_cost = 0.0;     // O_o, same for full offload
  double delta = 0.0;            // O_o - O_l
  double comm_mes_cost = 0.0;    // weighted per-unit-gamma transfer + server cost
  double gamma_threshold = 0.0;  // output scale at which delta changes sign
  double mu_min = 0.0;           // smallest mu meeting the error constraint
  double mu_star = 0.0;
  double expected_cost = 0.0;  // O(mu_star)
  double avg_error = 0.0;      // mean inference error at mu_star
};

namespace detail {

inline double drop_penalty_weight(const UavProfile& u) {
  return u.theta * u.rho + (1.0 - u.theta) * u.xi;
}

inline double local_compute_cost(const TaskSpec& t, const UavProfile& u) {
  return u.theta * (t.c / u.f_l) + (1.0 - u.theta) * u.kappa * u.f_l * u.f_l * t.c;
}

}  // namespace detail

inline double local_cost_binary(const TaskSpec& t, const UavProfile& u,
                                const EffectiveErrorRates& eff) {
  return detail::local_compute_cost(t, u) + eff.fast * detail::drop_penalty_weight(u);
}

inline double local_cost_binary(const TaskSpec& t, const UavProfile& u,
                                const QualityErrorModel& q) {
  return local_cost_binary(t, u, effective_error_rates(q));
}

// Weighted transfer-plus-server cost per unit of output scale. Both cost
// branches keep the on-board lower-layer compute terms; offloading moves the
// intermediate features, not the raw input.
inline double comm_mes_cost(const TaskSpec& t, const UavProfile& u, double rate, double f_i) {
  return (t.s / rate) * (u.theta + (1.0 - u.theta) * u.P_t) +
         (t.c / f_i) * (u.theta + (1.0 - u.theta) * u.P_I);
}

inline double offload_cost_binary(const TaskSpec& t, const UavProfile& u,
                                  const EffectiveErrorRates& eff, double rate, double f_i) {
  return detail::local_compute_cost(t, u) + eff.enhanced * detail::drop_penalty_weight(u) +
         t.gamma * comm_mes_cost(t, u, rate, f_i);
}

inline double offload_cost_binary(const TaskSpec& t, const UavProfile& u,
                                  const QualityErrorModel& q, double rate, double f_i) {
  return offload_cost_binary(t, u, effective_error_rates(q), rate, f_i);
}

// Expected delays at the two endpoints, used for the post-hoc sigma check.
inline double local_delay_binary(const TaskSpec& t, const UavProfile& u,
                                 const EffectiveErrorRates& eff) {
  return t.c / u.f_l + u.rho * eff.fast;
}

inline double offload_delay_binary(const TaskSpec& t, const UavProfile& u,
                                   const EffectiveErrorRates& eff, double rate, double f_i) {
  return t.c / u.f_l + t.gamma * (t.s / rate + t.c / f_i) + u.rho * eff.enhanced;
}

struct DeltaCost {
  double delta = 0.0;            // offload minus local cost
  double comm_mes_cost = 0.0;    // C term
  double gamma_threshold = 0.0;  // gamma_B
};

/// Cost difference decomposition: delta = gamma*C - (fast-enhanced)*penalty,
/// so delta and (gamma - gamma_threshold) always share a sign.
inline DeltaCost delta_cost(const TaskSpec& t, const UavProfile& u, const EffectiveErrorRates& eff,
                            double rate, double f_i) {
  DeltaCost d;
  d.comm_mes_cost = comm_mes_cost(t, u, rate, f_i);
  const double penalty_gain = (eff.fast - eff.enhanced) * detail::drop_penalty_weight(u);
  d.delta = t.gamma * d.comm_mes_cost - penalty_gain;
  d.gamma_threshold = penalty_gain / d.comm_mes_cost;
  return d;
}

inline DeltaCost delta_cost(const TaskSpec& t, const UavProfile& u, const QualityErrorModel& q,
                            double rate, double f_i) {
  return delta_cost(t, u, effective_error_rates(q), rate, f_i);
}

/// Smallest offloading probability satisfying the error constraint.
inline double mu_feasibility_bound(const QualityErrorModel& q) {
  return min_feasible_offload(effective_error_rates(q), q.eps_T);
}

/// Closed-form optimal offloading probability.
/// Below the gamma threshold offloading is strictly cheaper (mu* = 1); above
/// it the objective grows with mu, so the error constraint binds (mu* =
/// mu_min). At the threshold the cost is flat and the least offloading wins.
inline BinaryCostBreakdown optimal_mu(const TaskSpec& t, const UavProfile& u,
                                      const QualityErrorModel& q, double rate, double f_i) {
  const EffectiveErrorRates eff = effective_error_rates(q);
  BinaryCostBreakdown b;
  b.mu_min = min_feasible_offload(eff, q.eps_T);
  b.local_cost = local_cost_binary(t, u, eff);
  b.offload_cost = offload_cost_binary(t, u, eff, rate, f_i);
  const DeltaCost d = delta_cost(t, u, eff, rate, f_i);
  b.delta = d.delta;
  b.comm_mes_cost = d.comm_mes_cost;
  b.gamma_threshold = d.gamma_threshold;
  b.mu_star = (t.gamma < d.gamma_threshold) ? 1.0 : b.mu_min;
  b.expected_cost = b.local_cost + b.mu_star * b.delta;
  b.avg_error = average_error(eff, b.mu_star);
  return b;
}

/// Descriptive offloading probability from the threshold-exceedance model.
/// Not used by the optimizer; exposed for reporting only.
inline double definition5_probability(double eps_T) { return std::exp(-eps_T); }

struct LocalOnlyResult {
  double total_cost = 0.0;
  std::vector<double> per_uav_cost;
  double per_uav_error = 0.0;   // local-only mean error, same for the whole fleet
  bool error_feasible = false;  // per_uav_error <= eps_T
};

/// Fleet cost when the channel is unavailable and every task stays on board.
/// Constraint violations are reported, not thrown; this is the baseline the
/// comparisons run against even when it breaks the error budget.
inline LocalOnlyResult local_only_cost(std::span<const TaskSpec> tasks,
                                       std::span<const UavProfile> uavs,
                                       const QualityErrorModel& q) {
  const EffectiveErrorRates eff = effective_error_rates(q);
  LocalOnlyResult r;
  r.per_uav_error = eff.fast;
  r.error_feasible = eff.fast <= q.eps_T + 1e-12;
  r.per_uav_cost.reserve(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const double cost = local_cost_binary(tasks[i], uavs[i], eff);
    r.per_uav_cost.push_back(cost);
    r.total_cost += cost;
  }
  return r;
}

}  // namespace uavoff
