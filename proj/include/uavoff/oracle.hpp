#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "uavoff/types.hpp"

namespace uavoff {
namespace oracle {

// Brute-force certification of the closed-form optimizers. Everything here
// is evaluated from the raw definitions (endpoint costs combined by the
// decision variable), deliberately not sharing the rearranged expressions
// the optimizers are built on. Dumb on purpose: the grid is the argument.

struct GridSearchResult {
  double best_var = std::numeric_limits<double>::quiet_NaN();
  double best_cost = std::numeric_limits<double>::infinity();
  long feasible_count = 0;
  double resolution = 0.0;

  bool empty() const { return feasible_count == 0; }
};

namespace detail {

inline double fast_error(const QualityErrorModel& q) {
  return (1.0 - q.eta) * q.eps_L + q.eta;
}

inline double enhanced_error(const QualityErrorModel& q) { return q.eta * q.eps_H; }

inline long grid_points(double resolution) {
  if (!(resolution > 0.0) || resolution > 0.1) {
    throw std::invalid_argument("resolution: grid step must be in (0, 0.1]");
  }
  return static_cast<long>(std::llround(std::ceil(1.0 / resolution)));
}

}  // namespace detail

/// Grid minimum of the expected binary-offloading cost
/// (1-mu)*O_local + mu*O_offload subject to the mean-error threshold.
inline GridSearchResult grid_min_binary(const TaskSpec& t, const UavProfile& u,
                                        const QualityErrorModel& q, double rate, double f_i,
                                        double resolution = 1e-4) {
  const long K = detail::grid_points(resolution);
  const double etl = detail::fast_error(q);
  const double eth = detail::enhanced_error(q);

  const double tau_local = t.c / u.f_l + u.rho * etl;
  const double energy_local = u.kappa * u.f_l * u.f_l * t.c + u.xi * etl;
  const double cost_local = u.theta * tau_local + (1.0 - u.theta) * energy_local;

  const double tau_off = t.c / u.f_l + t.gamma * (t.s / rate + t.c / f_i) + u.rho * eth;
  const double energy_off = u.kappa * u.f_l * u.f_l * t.c +
                            t.gamma * (u.P_t * t.s / rate + u.P_I * t.c / f_i) + u.xi * eth;
  const double cost_off = u.theta * tau_off + (1.0 - u.theta) * energy_off;

  GridSearchResult r;
  r.resolution = 1.0 / static_cast<double>(K);
  for (long k = 0; k <= K; ++k) {
    const double mu = static_cast<double>(k) / static_cast<double>(K);
    const double err = (1.0 - mu) * etl + mu * eth;
    if (err > q.eps_T + 1e-12) continue;
    ++r.feasible_count;
    const double cost = (1.0 - mu) * cost_local + mu * cost_off;
    if (cost < r.best_cost) {
      r.best_cost = cost;
      r.best_var = mu;
    }
  }
  return r;
}

/// Grid minimum of the partial-offloading weighted cost at an explicit
/// preference weight, subject to the same error threshold.
inline GridSearchResult grid_min_partial(const TaskSpec& t, const UavProfile& u,
                                         const QualityErrorModel& q, double rate, double f_i,
                                         double theta, double resolution = 1e-4) {
  const long K = detail::grid_points(resolution);
  const double etl = detail::fast_error(q);
  const double eth = detail::enhanced_error(q);

  const double compute_delay = t.c / u.f_l;
  const double compute_energy = u.kappa * u.f_l * u.f_l * t.c;
  const double transfer = t.gamma * (t.s / rate + t.c / f_i);
  const double transfer_energy = t.gamma * (u.P_t * t.s / rate + u.P_I * t.c / f_i);

  GridSearchResult r;
  r.resolution = 1.0 / static_cast<double>(K);
  for (long k = 0; k <= K; ++k) {
    const double beta = static_cast<double>(k) / static_cast<double>(K);
    const double err = (1.0 - beta) * etl + beta * eth;
    if (err > q.eps_T + 1e-12) continue;
    ++r.feasible_count;
    const double branch_local = (1.0 - beta) * u.rho * etl;
    const double branch_off = beta * (transfer + u.rho * eth);
    const double delay = compute_delay + std::max(branch_local, branch_off);
    const double energy = (1.0 - beta) * (compute_energy + u.xi * etl) +
                          beta * (compute_energy + transfer_energy + u.xi * eth);
    const double cost = theta * delay + (1.0 - theta) * energy;
    if (cost < r.best_cost) {
      r.best_cost = cost;
      r.best_var = beta;
    }
  }
  return r;
}

/// Slope bound of the binary objective; the objective is affine in mu, so
/// the bound is exact.
inline double estimate_slope_binary(const TaskSpec& t, const UavProfile& u,
                                    const QualityErrorModel& q, double rate, double f_i) {
  const double etl = detail::fast_error(q);
  const double eth = detail::enhanced_error(q);
  const double tau_local = t.c / u.f_l + u.rho * etl;
  const double energy_local = u.kappa * u.f_l * u.f_l * t.c + u.xi * etl;
  const double cost_local = u.theta * tau_local + (1.0 - u.theta) * energy_local;
  const double tau_off = t.c / u.f_l + t.gamma * (t.s / rate + t.c / f_i) + u.rho * eth;
  const double energy_off = u.kappa * u.f_l * u.f_l * t.c +
                            t.gamma * (u.P_t * t.s / rate + u.P_I * t.c / f_i) + u.xi * eth;
  const double cost_off = u.theta * tau_off + (1.0 - u.theta) * energy_off;
  return std::abs(cost_off - cost_local);
}

/// Largest cost change between adjacent grid points divided by the step: a
/// numeric slope bound for the certification tolerance.
inline double estimate_slope_partial(const TaskSpec& t, const UavProfile& u,
                                     const QualityErrorModel& q, double rate, double f_i,
                                     double theta, double resolution = 1e-2) {
  const long K = detail::grid_points(resolution);
  double prev = std::numeric_limits<double>::quiet_NaN();
  double max_slope = 0.0;
  const double etl = detail::fast_error(q);
  const double eth = detail::enhanced_error(q);
  const double compute_delay = t.c / u.f_l;
  const double compute_energy = u.kappa * u.f_l * u.f_l * t.c;
  const double transfer = t.gamma * (t.s / rate + t.c / f_i);
  const double transfer_energy = t.gamma * (u.P_t * t.s / rate + u.P_I * t.c / f_i);
  for (long k = 0; k <= K; ++k) {
    const double beta = static_cast<double>(k) / static_cast<double>(K);
    const double branch_local = (1.0 - beta) * u.rho * etl;
    const double branch_off = beta * (transfer + u.rho * eth);
    const double delay = compute_delay + std::max(branch_local, branch_off);
    const double energy = (1.0 - beta) * (compute_energy + u.xi * etl) +
                          beta * (compute_energy + transfer_energy + u.xi * eth);
    const double cost = theta * delay + (1.0 - theta) * energy;
    if (k > 0) max_slope = std::max(max_slope, std::abs(cost - prev) * static_cast<double>(K));
    prev = cost;
  }
  return max_slope;
}

}  // namespace oracle
}  // namespace uavoff
