#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "uavoff/error_model.hpp"
#include "uavoff/types.hpp"

namespace uavoff {

// Partial offloading: a fraction beta of the task data goes to the server,
// 1-beta stays on board. The two sides run in parallel, so the delay is the
// shared lower-layer pass plus the slower of the two penalty branches; the
// weighted cost is piecewise-affine in beta with a single kink where the
// branches cross.

struct PartialComponents {
  double local_delay = 0.0;     // (1-beta)(c/f_l + rho*fast)
  double local_energy = 0.0;    // (1-beta)(kappa f_l^2 c + xi*fast)
  double offload_delay = 0.0;   // beta(c/f_l + gamma(s/R + c/f_i) + rho*enhanced)
  double offload_energy = 0.0;  // beta(kappa f_l^2 c + gamma(P_t s/R + P_I c/f_i) + xi*enh)
  double local_branch = 0.0;    // delay-penalty branch of the local side
  double offload_branch = 0.0;  // transfer + server + penalty branch of the offload side
};

inline PartialComponents partial_components(const TaskSpec& t, const UavProfile& u,
                                            const EffectiveErrorRates& eff, double rate,
                                            double f_i, double beta) {
  PartialComponents p;
  const double compute_delay = t.c / u.f_l;
  const double compute_energy = u.kappa * u.f_l * u.f_l * t.c;
  const double transfer = t.gamma * (t.s / rate + t.c / f_i);
  const double transfer_energy = t.gamma * (u.P_t * t.s / rate + u.P_I * t.c / f_i);
  p.local_delay = (1.0 - beta) * (compute_delay + u.rho * eff.fast);
  p.local_energy = (1.0 - beta) * (compute_energy + u.xi * eff.fast);
  p.offload_delay = beta * (compute_delay + transfer + u.rho * eff.enhanced);
  p.offload_energy = beta * (compute_energy + transfer_energy + u.xi * eff.enhanced);
  p.local_branch = (1.0 - beta) * u.rho * eff.fast;
  p.offload_branch = beta * (transfer + u.rho * eff.enhanced);
  return p;
}

inline PartialComponents partial_components(const TaskSpec& t, const UavProfile& u,
                                            const QualityErrorModel& q, double rate, double f_i,
                                            double beta) {
  return partial_components(t, u, effective_error_rates(q), rate, f_i, beta);
}

struct PartialTotals {
  double total_delay = 0.0;    // c/f_l + max(local_branch, offload_branch)
  double energy = 0.0;         // local_energy + offload_energy
  double weighted_cost = 0.0;  // theta*total_delay + (1-theta)*energy
};

inline PartialTotals partial_total_cost(const TaskSpec& t, const UavProfile& u,
                                        const EffectiveErrorRates& eff, double rate, double f_i,
                                        double beta, double theta) {
  const PartialComponents p = partial_components(t, u, eff, rate, f_i, beta);
  PartialTotals out;
  out.total_delay = t.c / u.f_l + std::max(p.local_branch, p.offload_branch);
  out.energy = p.local_energy + p.offload_energy;
  out.weighted_cost = theta * out.total_delay + (1.0 - theta) * out.energy;
  return out;
}

inline PartialTotals partial_total_cost(const TaskSpec& t, const UavProfile& u,
                                        const QualityErrorModel& q, double rate, double f_i,
                                        double beta) {
  return partial_total_cost(t, u, effective_error_rates(q), rate, f_i, beta, u.theta);
}

/// Ratio at which the local and offload penalty branches intersect; the
/// delay-only optimum sits here.
inline double beta_hat_case1(const TaskSpec& t, const UavProfile& u,
                             const EffectiveErrorRates& eff, double rate, double f_i) {
  const double transfer = t.gamma * (t.s / rate + t.c / f_i);
  return u.rho * eff.fast / (transfer + u.rho * (eff.fast + eff.enhanced));
}

inline double beta_hat_case1(const TaskSpec& t, const UavProfile& u, const QualityErrorModel& q,
                             double rate, double f_i) {
  return beta_hat_case1(t, u, effective_error_rates(q), rate, f_i);
}

/// Output-scale threshold for the energy-only objective: below it the energy
/// falls with beta, above it the error constraint binds.
inline double gamma_threshold_energy(const TaskSpec& t, const UavProfile& u,
                                     const EffectiveErrorRates& eff, double rate, double f_i) {
  return u.xi * (eff.fast - eff.enhanced) / (u.P_t * t.s / rate + u.P_I * t.c / f_i);
}

struct Case3Thresholds {
  double gamma_t1 = 0.0;  // slope sign flips on the local-dominant side
  double gamma_t2 = 0.0;  // slope sign flips on the offload-dominant side; t2 < t1 always
};

inline Case3Thresholds case3_thresholds(const TaskSpec& t, const UavProfile& u,
                                        const EffectiveErrorRates& eff, double rate, double f_i,
                                        double theta) {
  if (!(theta > 0.0) || !(theta < 1.0)) {
    throw std::invalid_argument(
        "theta: mixed-objective thresholds need 0 < theta < 1; "
        "use the delay-only or energy-only optimizer at the endpoints");
  }
  const double power_cost = u.P_t * t.s / rate + u.P_I * t.c / f_i;
  const double gap = eff.fast - eff.enhanced;
  Case3Thresholds th;
  th.gamma_t1 = (theta * u.rho * eff.fast / (1.0 - theta) + u.xi * gap) / power_cost;
  th.gamma_t2 = ((1.0 - theta) * u.xi * gap - theta * u.rho * eff.enhanced) /
                (theta * (t.s / rate + t.c / f_i) + (1.0 - theta) * power_cost);
  return th;
}

inline Case3Thresholds case3_thresholds(const TaskSpec& t, const UavProfile& u,
                                        const QualityErrorModel& q, double rate, double f_i) {
  return case3_thresholds(t, u, effective_error_rates(q), rate, f_i, u.theta);
}

// Affine form of the weighted cost on the side where the local penalty branch
// dominates: cost(beta) = slope*beta + offset + const. The slope sign matches
// the side of gamma_t1 the output scale falls on; used as a monotonicity
// oracle in the tests.
struct PartialCostLine {
  double slope = 0.0;
  double offset = 0.0;
};

inline PartialCostLine partial_cost_line(const TaskSpec& t, const UavProfile& u,
                                         const EffectiveErrorRates& eff, double rate, double f_i,
                                         double theta) {
  const double power_cost = u.P_t * t.s / rate + u.P_I * t.c / f_i;
  PartialCostLine line;
  line.slope = (1.0 - theta) * (t.gamma * power_cost - u.xi * (eff.fast - eff.enhanced)) -
               theta * u.rho * eff.fast;
  line.offset =
      theta * (t.c / u.f_l + u.rho * eff.fast) + (1.0 - theta) * u.kappa * u.f_l * u.f_l * t.c;
  return line;
}

inline PartialCostLine partial_cost_line(const TaskSpec& t, const UavProfile& u,
                                         const QualityErrorModel& q, double rate, double f_i) {
  return partial_cost_line(t, u, effective_error_rates(q), rate, f_i, u.theta);
}

enum class PartialCase {
  Case1Crossing,      // delay objective, optimum at the branch crossing
  Case1Bound,         // delay objective, error constraint binds
  Case2Full,          // energy objective, full offload
  Case2Bound,         // energy objective, error constraint binds
  Case3Full,          // gamma <= gamma_t2: cost falls with beta everywhere
  Case3Crossing,      // gamma in (gamma_t2, gamma_t1]: optimum at the crossing
  Case3CrossingBound, // same region, but the error constraint sits above it
  Case3Bound,         // gamma > gamma_t1: cost rises with beta, constraint binds
};

inline const char* to_string(PartialCase c) {
  switch (c) {
    case PartialCase::Case1Crossing: return "case1_crossing";
    case PartialCase::Case1Bound: return "case1_bound";
    case PartialCase::Case2Full: return "case2_full";
    case PartialCase::Case2Bound: return "case2_bound";
    case PartialCase::Case3Full: return "case3_full";
    case PartialCase::Case3Crossing: return "case3_crossing";
    case PartialCase::Case3CrossingBound: return "case3_crossing_bound";
    case PartialCase::Case3Bound: return "case3_bound";
  }
  return "unknown";
}

struct PartialCostBreakdown {
  double local_branch = 0.0;    // penalty branches at beta_star
  double offload_branch = 0.0;
  double total_delay = 0.0;
  double energy = 0.0;
  double weighted_cost = 0.0;
  double beta_hat = 0.0;        // branch-crossing ratio
  double beta_min = 0.0;        // smallest error-feasible ratio
  double gamma_t1 = std::numeric_limits<double>::quiet_NaN();
  double gamma_t2 = std::numeric_limits<double>::quiet_NaN();
  double gamma_t_energy = std::numeric_limits<double>::quiet_NaN();
  double beta_star = 0.0;
  PartialCase case_tag = PartialCase::Case3Full;
  double avg_error = 0.0;
};

namespace detail {

inline PartialCostBreakdown finish_breakdown(const TaskSpec& t, const UavProfile& u,
                                             const EffectiveErrorRates& eff, double rate,
                                             double f_i, double theta_eval,
                                             PartialCostBreakdown b) {
  const PartialComponents p = partial_components(t, u, eff, rate, f_i, b.beta_star);
  const PartialTotals totals = partial_total_cost(t, u, eff, rate, f_i, b.beta_star, theta_eval);
  b.local_branch = p.local_branch;
  b.offload_branch = p.offload_branch;
  b.total_delay = totals.total_delay;
  b.energy = totals.energy;
  b.weighted_cost = totals.weighted_cost;
  b.avg_error = average_error(eff, b.beta_star);
  return b;
}

// Feasibility bound for the quality-split model, where the threshold may sit
// above the attainable range (constraint slack) without being an error.
inline double min_feasible_offload_clamped(const EffectiveErrorRates& eff, double eps_T) {
  if (eps_T < eff.enhanced) {
    throw InfeasibleThreshold("eps_T=" + std::to_string(eps_T) +
                              " below the best attainable error " + std::to_string(eff.enhanced));
  }
  if (eps_T >= eff.fast) return 0.0;
  return (eff.fast - eps_T) / (eff.fast - eff.enhanced);
}

inline PartialCostBreakdown optimal_beta_case1_impl(const TaskSpec& t, const UavProfile& u,
                                                    const EffectiveErrorRates& eff, double rate,
                                                    double f_i, double beta_min) {
  PartialCostBreakdown b;
  b.beta_min = beta_min;
  b.beta_hat = beta_hat_case1(t, u, eff, rate, f_i);
  b.beta_star = std::max(b.beta_hat, b.beta_min);
  b.case_tag = (b.beta_hat >= b.beta_min) ? PartialCase::Case1Crossing : PartialCase::Case1Bound;
  return finish_breakdown(t, u, eff, rate, f_i, 1.0, b);
}

inline PartialCostBreakdown optimal_beta_case2_impl(const TaskSpec& t, const UavProfile& u,
                                                    const EffectiveErrorRates& eff, double rate,
                                                    double f_i, double beta_min) {
  PartialCostBreakdown b;
  b.beta_min = beta_min;
  b.beta_hat = beta_hat_case1(t, u, eff, rate, f_i);
  b.gamma_t_energy = gamma_threshold_energy(t, u, eff, rate, f_i);
  // At the threshold the energy is flat in beta; prefer the least offloading.
  if (t.gamma < b.gamma_t_energy) {
    b.beta_star = 1.0;
    b.case_tag = PartialCase::Case2Full;
  } else {
    b.beta_star = b.beta_min;
    b.case_tag = PartialCase::Case2Bound;
  }
  return finish_breakdown(t, u, eff, rate, f_i, 0.0, b);
}

inline PartialCostBreakdown optimal_beta_case3_impl(const TaskSpec& t, const UavProfile& u,
                                                    const EffectiveErrorRates& eff, double rate,
                                                    double f_i, double theta, double beta_min) {
  const Case3Thresholds th = case3_thresholds(t, u, eff, rate, f_i, theta);
  PartialCostBreakdown b;
  b.beta_min = beta_min;
  b.beta_hat = beta_hat_case1(t, u, eff, rate, f_i);
  b.gamma_t1 = th.gamma_t1;
  b.gamma_t2 = th.gamma_t2;
  // Ties go to the branch below the threshold, where the cost is flat on one
  // side and the chosen point is still a minimizer.
  if (t.gamma <= th.gamma_t2) {
    b.beta_star = 1.0;
    b.case_tag = PartialCase::Case3Full;
  } else if (t.gamma <= th.gamma_t1) {
    b.beta_star = std::max(b.beta_hat, b.beta_min);
    b.case_tag = (b.beta_hat >= b.beta_min) ? PartialCase::Case3Crossing
                                            : PartialCase::Case3CrossingBound;
  } else {
    if (b.beta_min > b.beta_hat) {
      throw InfeasibleConfiguration(
          "no constraint-satisfying optimum: the error bound beta=" +
          std::to_string(b.beta_min) + " exceeds the branch crossing beta=" +
          std::to_string(b.beta_hat) + " while the cost rises with beta");
    }
    b.beta_star = b.beta_min;
    b.case_tag = PartialCase::Case3Bound;
  }
  return finish_breakdown(t, u, eff, rate, f_i, theta, b);
}

inline PartialCostBreakdown optimal_beta_dispatch(const TaskSpec& t, const UavProfile& u,
                                                  const EffectiveErrorRates& eff, double rate,
                                                  double f_i, double theta, double beta_min) {
  if (theta >= 1.0) return optimal_beta_case1_impl(t, u, eff, rate, f_i, beta_min);
  if (theta <= 0.0) return optimal_beta_case2_impl(t, u, eff, rate, f_i, beta_min);
  return optimal_beta_case3_impl(t, u, eff, rate, f_i, theta, beta_min);
}

}  // namespace detail

/// Delay-only optimum (theta = 1): the crossing point, pushed up to the error
/// bound when the constraint is tighter.
inline PartialCostBreakdown optimal_beta_case1(const TaskSpec& t, const UavProfile& u,
                                               const QualityErrorModel& q, double rate,
                                               double f_i) {
  const EffectiveErrorRates eff = effective_error_rates(q);
  return detail::optimal_beta_case1_impl(t, u, eff, rate, f_i,
                                         min_feasible_offload(eff, q.eps_T));
}

/// Energy-only optimum (theta = 0): an endpoint of the feasible interval,
/// picked by the sign of the energy slope.
inline PartialCostBreakdown optimal_beta_case2(const TaskSpec& t, const UavProfile& u,
                                               const QualityErrorModel& q, double rate,
                                               double f_i) {
  const EffectiveErrorRates eff = effective_error_rates(q);
  return detail::optimal_beta_case2_impl(t, u, eff, rate, f_i,
                                         min_feasible_offload(eff, q.eps_T));
}

/// Mixed-objective optimum (0 < theta < 1), split by the output scale into
/// full offload, crossing-point, and constraint-bound regions.
inline PartialCostBreakdown optimal_beta_case3(const TaskSpec& t, const UavProfile& u,
                                               const QualityErrorModel& q, double rate,
                                               double f_i) {
  if (!(u.theta > 0.0) || !(u.theta < 1.0)) {
    throw std::invalid_argument(
        "theta: the mixed-objective optimizer needs 0 < theta < 1; "
        "use optimal_beta() to dispatch the endpoints");
  }
  const EffectiveErrorRates eff = effective_error_rates(q);
  return detail::optimal_beta_case3_impl(t, u, eff, rate, f_i, u.theta,
                                         min_feasible_offload(eff, q.eps_T));
}

/// Optimal offloading ratio for the UAV's own preference weight.
inline PartialCostBreakdown optimal_beta(const TaskSpec& t, const UavProfile& u,
                                         const QualityErrorModel& q, double rate, double f_i) {
  const EffectiveErrorRates eff = effective_error_rates(q);
  return detail::optimal_beta_dispatch(t, u, eff, rate, f_i, u.theta,
                                       min_feasible_offload(eff, q.eps_T));
}

struct SpecialPartialResult {
  PartialCostBreakdown best;   // optimum of the quality-split cost model
  double quality_beta = 0.0;   // operating point matching the Bad-frame share
  double quality_cost = 0.0;
  double quality_error = 0.0;
  bool quality_error_feasible = false;
};

/// Quality-aware split: Bad frames go to the server, Good frames stay on
/// board, so each side sees only its own class and the effective error rates
/// collapse to the raw per-class ones. Also reports the operating point where
/// the offloaded share equals the Bad-frame probability.
inline SpecialPartialResult optimal_beta_special(const TaskSpec& t, const UavProfile& u,
                                                 const QualityErrorModel& q, double rate,
                                                 double f_i) {
  if (q.eps_L < q.eps_H) {
    throw std::invalid_argument(
        "eps_H: the quality split assumes the server stage is at least as "
        "accurate on Bad frames as the on-board stage is on Good frames");
  }
  const EffectiveErrorRates eff{q.eps_L, q.eps_H};
  const double beta_min = detail::min_feasible_offload_clamped(eff, q.eps_T);
  SpecialPartialResult r;
  r.best = detail::optimal_beta_dispatch(t, u, eff, rate, f_i, u.theta, beta_min);
  r.quality_beta = q.eta;
  const PartialTotals at_eta = partial_total_cost(t, u, eff, rate, f_i, q.eta, u.theta);
  r.quality_cost = at_eta.weighted_cost;
  r.quality_error = average_error(eff, q.eta);
  r.quality_error_feasible = r.quality_error <= q.eps_T + 1e-12;
  return r;
}

}  // namespace uavoff
