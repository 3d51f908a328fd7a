#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace uavoff {

// Thrown when the error-rate threshold cannot be met by any offloading
// decision (or lies outside the range the bound formula is valid on).
struct InfeasibleThreshold : std::domain_error {
  using std::domain_error::domain_error;
};

// Thrown when the closed-form partial optimizer has no constraint-satisfying
// optimum (error-bound branch exceeds the delay-crossing point).
struct InfeasibleConfiguration : std::domain_error {
  using std::domain_error::domain_error;
};

// One deep-learning task: input size, compute demand, delay budget, and the
// size ratio of the intermediate features leaving the on-board layers.
struct TaskSpec {
  double s = 0.0;      // input data size [bits]
  double c = 0.0;      // CPU cycles to process the task
  double sigma = 0.0;  // max tolerable delay [s]
  double gamma = 0.0;  // intermediate output size / input size
};

// Per-UAV compute, power and preference parameters.
struct UavProfile {
  double f_l = 0.0;    // local CPU frequency [cycles/s]
  double kappa = 0.0;  // chip energy coefficient [J.s^2/cycle^3]
  double P_t = 0.0;    // transmit power [W]
  double P_I = 0.0;    // idle power while awaiting results [W]
  double rho = 0.0;    // task-drop penalty on delay [s]
  double xi = 0.0;     // task-drop penalty on energy [J]
  double theta = 0.0;  // delay preference weight, 0..1
};

struct Position {
  double x = 0.0;  // [m]
  double y = 0.0;  // [m]
};

// Geometry and radio parameters of one UAV-to-server uplink.
struct LinkModel {
  double h0 = 0.0;        // reference power gain at 1 m (linear)
  double altitude = 0.0;  // UAV height above the server plane [m]
  Position mes_position;
  Position uav_position;
  double B = 0.0;       // total uplink bandwidth [Hz]
  int n = 1;            // offloading UAVs sharing B
  double chi_sq = 0.0;  // noise power [W]
};

// Frame-quality mix and the per-stage inference error rates.
struct QualityErrorModel {
  double eta = 0.0;    // probability a frame is Bad
  double eps_L = 0.0;  // on-board (fast) inference error on Good frames
  double eps_H = 0.0;  // server (enhanced) inference error on Bad frames
  double eps_T = 0.0;  // per-UAV average-error threshold
};

// Edge-server compute budget and its per-UAV split.
struct MesProfile {
  double F = 0.0;                  // total CPU frequency [cycles/s]
  std::vector<double> allocation;  // per-UAV f_i; empty = equal split
};

namespace detail {

inline void require(bool ok, const std::string& field, const std::string& what) {
  if (!ok) throw std::invalid_argument(field + ": " + what);
}

}  // namespace detail

inline void validate(const TaskSpec& t) {
  detail::require(t.s > 0, "s", "data size must be > 0 bits");
  detail::require(t.c > 0, "c", "CPU cycles must be > 0");
  detail::require(t.sigma > 0, "sigma", "max tolerable delay must be > 0 s");
  detail::require(t.gamma > 0, "gamma", "output scale coefficient must be > 0");
}

inline void validate(const UavProfile& u) {
  detail::require(u.f_l > 0, "f_l", "local CPU frequency must be > 0 Hz");
  detail::require(u.kappa > 0, "kappa", "energy coefficient must be > 0");
  detail::require(u.P_t > 0, "P_t", "transmit power must be > 0 W");
  detail::require(u.P_I >= 0, "P_I", "idle power must be >= 0 W");
  detail::require(u.rho > 0, "rho", "delay penalty must be > 0 s");
  detail::require(u.xi >= 0, "xi", "energy penalty must be >= 0 J");
  detail::require(u.theta >= 0 && u.theta <= 1, "theta", "preference weight must be in [0,1]");
}

inline void validate(const LinkModel& l) {
  detail::require(l.h0 > 0, "h0", "reference gain must be > 0 (linear)");
  detail::require(l.altitude > 0, "altitude", "UAV altitude must be > 0 m");
  detail::require(l.B > 0, "B", "bandwidth must be > 0 Hz");
  detail::require(l.n >= 1, "n", "number of sharing UAVs must be >= 1");
  detail::require(l.chi_sq > 0, "chi_sq", "noise power must be > 0 W");
}

inline void validate(const QualityErrorModel& q) {
  detail::require(q.eta >= 0 && q.eta <= 1, "eta", "Bad-frame probability must be in [0,1]");
  detail::require(q.eps_L > 0 && q.eps_L < 1, "eps_L", "fast-inference error must be in (0,1)");
  detail::require(q.eps_H > 0 && q.eps_H < 1, "eps_H", "enhanced-inference error must be in (0,1)");
}

inline void validate(const MesProfile& m) {
  detail::require(m.F > 0, "F", "server CPU frequency must be > 0 Hz");
  double sum = 0.0;
  for (double f : m.allocation) {
    detail::require(f > 0, "allocation", "each allocated f_i must be > 0 Hz");
    sum += f;
  }
  detail::require(sum <= m.F * (1.0 + 1e-12), "allocation", "sum of f_i must not exceed F");
}

// The drop penalty has to dominate the plain processing delay, otherwise
// dropping a task would be cheaper than finishing it.
inline void validate_penalty_bound(const TaskSpec& t, const UavProfile& u, double f_i) {
  detail::require(u.rho > std::max(t.c / u.f_l, t.c / f_i), "rho",
                  "delay penalty must exceed the task processing delay");
}

}  // namespace uavoff
