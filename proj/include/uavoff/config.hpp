#pragma once

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "uavoff/channel.hpp"
#include "uavoff/error_model.hpp"
#include "uavoff/fleet.hpp"
#include "uavoff/types.hpp"

namespace uavoff {

inline constexpr const char* kToolVersion = "0.1.0";

// JSON config with two sections:
//
//   "scenario": flat key/value parameters; anything omitted takes the
//               defaults below (homogeneous fleet of n UAVs).
//   "sweeps":   list of { "parameter", "start"/"stop"/"step" or "values",
//               "strategies", "output" } entries.
//
// Scenario keys (units in the names where they matter):
//   n, s_bits, c_cycles | cycles_per_bit, sigma_s, theta, eta, gamma,
//   f_l_hz, F_hz, eps_L, eps_H, e | eps_T, rho_s, xi_j, kappa,
//   P_t_w, P_I_w, chi_sq_w, B_hz, h0_db | h0_linear, altitude_m,
//   offset_m | offsets_m, strategy.

struct SweepParameter {
  enum class Kind { Gamma, Beta, MesFrequency, FleetSize, Eta, ErrorThreshold, Theta };
  Kind kind = Kind::Gamma;
};

inline const char* to_string(SweepParameter::Kind k) {
  switch (k) {
    case SweepParameter::Kind::Gamma: return "gamma";
    case SweepParameter::Kind::Beta: return "beta";
    case SweepParameter::Kind::MesFrequency: return "F";
    case SweepParameter::Kind::FleetSize: return "n";
    case SweepParameter::Kind::Eta: return "eta";
    case SweepParameter::Kind::ErrorThreshold: return "eps_T";
    case SweepParameter::Kind::Theta: return "theta";
  }
  return "unknown";
}

inline SweepParameter::Kind parse_sweep_parameter(const std::string& name) {
  using Kind = SweepParameter::Kind;
  if (name == "gamma") return Kind::Gamma;
  if (name == "beta") return Kind::Beta;
  if (name == "F") return Kind::MesFrequency;
  if (name == "n") return Kind::FleetSize;
  if (name == "eta") return Kind::Eta;
  if (name == "eps_T") return Kind::ErrorThreshold;
  if (name == "theta") return Kind::Theta;
  throw std::invalid_argument("parameter: unknown sweep parameter '" + name +
                              "' (expected gamma, beta, F, n, eta, eps_T or theta)");
}

struct SweepSpec {
  SweepParameter::Kind parameter = SweepParameter::Kind::Gamma;
  std::vector<double> values;
  std::vector<Strategy> strategies;
  std::string output;
};

struct AppConfig {
  Scenario scenario;
  std::vector<SweepSpec> sweeps;
};

namespace detail {

// Raw scenario parameters as read from the config, pre-expansion.
struct ScenarioParams {
  int n = 2;
  double s_bits = 1e6;
  std::optional<double> c_cycles;
  double cycles_per_bit = 1000.0;
  double sigma_s = 10.0;
  double theta = 0.5;
  double eta = 0.5;
  double gamma = 7.0;
  double f_l_hz = 1e9;
  double F_hz = 1e10;
  double eps_L = 0.3;
  double eps_H = 0.2;
  std::optional<double> eps_T;
  double e_margin = 0.1;
  double rho_s = 8.0;
  double xi_j = 8.0;
  double kappa = 1e-28;
  double P_t_w = 10.0;
  double P_I_w = 5.0;
  double chi_sq_w = 7.9e-13;
  double B_hz = 1e7;
  std::optional<double> h0_db;
  std::optional<double> h0_linear;
  double altitude_m = 100.0;
  double offset_m = 20.0;
  std::vector<double> offsets_m;
  Strategy strategy = Strategy::OptimalPartial;
};

inline double get_number(const nlohmann::json& j, const std::string& key) {
  if (!j.at(key).is_number()) {
    throw std::invalid_argument(key + ": expected a number");
  }
  return j.at(key).get<double>();
}

inline ScenarioParams parse_scenario_params(const nlohmann::json& j) {
  static const std::set<std::string> known = {
      "n",      "s_bits",  "c_cycles", "cycles_per_bit", "sigma_s",  "theta",
      "eta",    "gamma",   "f_l_hz",   "F_hz",           "eps_L",    "eps_H",
      "eps_T",  "e",       "rho_s",    "xi_j",           "kappa",    "P_t_w",
      "P_I_w",  "chi_sq_w","B_hz",     "h0_db",          "h0_linear","altitude_m",
      "offset_m","offsets_m","strategy"};
  for (const auto& item : j.items()) {
    if (!known.count(item.key())) {
      throw std::invalid_argument("scenario." + item.key() + ": unknown key");
    }
  }
  ScenarioParams p;
  if (j.contains("n")) {
    const double n = get_number(j, "n");
    if (n < 1 || n != static_cast<double>(static_cast<int>(n))) {
      throw std::invalid_argument("n: fleet size must be a positive integer");
    }
    p.n = static_cast<int>(n);
  }
  if (j.contains("s_bits")) p.s_bits = get_number(j, "s_bits");
  if (j.contains("c_cycles")) p.c_cycles = get_number(j, "c_cycles");
  if (j.contains("cycles_per_bit")) p.cycles_per_bit = get_number(j, "cycles_per_bit");
  if (j.contains("sigma_s")) p.sigma_s = get_number(j, "sigma_s");
  if (j.contains("theta")) p.theta = get_number(j, "theta");
  if (j.contains("eta")) p.eta = get_number(j, "eta");
  if (j.contains("gamma")) p.gamma = get_number(j, "gamma");
  if (j.contains("f_l_hz")) p.f_l_hz = get_number(j, "f_l_hz");
  if (j.contains("F_hz")) p.F_hz = get_number(j, "F_hz");
  if (j.contains("eps_L")) p.eps_L = get_number(j, "eps_L");
  if (j.contains("eps_H")) p.eps_H = get_number(j, "eps_H");
  if (j.contains("eps_T")) p.eps_T = get_number(j, "eps_T");
  if (j.contains("e")) p.e_margin = get_number(j, "e");
  if (j.contains("rho_s")) p.rho_s = get_number(j, "rho_s");
  if (j.contains("xi_j")) p.xi_j = get_number(j, "xi_j");
  if (j.contains("kappa")) p.kappa = get_number(j, "kappa");
  if (j.contains("P_t_w")) p.P_t_w = get_number(j, "P_t_w");
  if (j.contains("P_I_w")) p.P_I_w = get_number(j, "P_I_w");
  if (j.contains("chi_sq_w")) p.chi_sq_w = get_number(j, "chi_sq_w");
  if (j.contains("B_hz")) p.B_hz = get_number(j, "B_hz");
  if (j.contains("h0_db")) p.h0_db = get_number(j, "h0_db");
  if (j.contains("h0_linear")) p.h0_linear = get_number(j, "h0_linear");
  if (j.contains("h0_db") && j.contains("h0_linear")) {
    throw std::invalid_argument("h0_db/h0_linear: give the reference gain one way, not both");
  }
  if (j.contains("altitude_m")) p.altitude_m = get_number(j, "altitude_m");
  if (j.contains("offset_m")) p.offset_m = get_number(j, "offset_m");
  if (j.contains("offsets_m")) {
    if (!j.at("offsets_m").is_array()) {
      throw std::invalid_argument("offsets_m: expected an array of per-UAV offsets");
    }
    for (const auto& v : j.at("offsets_m")) p.offsets_m.push_back(v.get<double>());
  }
  if (j.contains("strategy")) p.strategy = parse_strategy(j.at("strategy").get<std::string>());
  return p;
}

inline Scenario expand_scenario(const ScenarioParams& p) {
  if (!p.offsets_m.empty() && p.offsets_m.size() != static_cast<std::size_t>(p.n)) {
    throw std::invalid_argument("offsets_m: expected one offset per UAV (n=" +
                                std::to_string(p.n) + ")");
  }
  Scenario sc;
  sc.strategy = p.strategy;

  TaskSpec task;
  task.s = p.s_bits;
  task.c = p.c_cycles ? *p.c_cycles : p.cycles_per_bit * p.s_bits;
  task.sigma = p.sigma_s;
  task.gamma = p.gamma;

  UavProfile profile;
  profile.f_l = p.f_l_hz;
  profile.kappa = p.kappa;
  profile.P_t = p.P_t_w;
  profile.P_I = p.P_I_w;
  profile.rho = p.rho_s;
  profile.xi = p.xi_j;
  profile.theta = p.theta;

  QualityErrorModel quality;
  quality.eta = p.eta;
  quality.eps_L = p.eps_L;
  quality.eps_H = p.eps_H;
  validate(quality);
  if (p.eps_T) {
    quality.eps_T = *p.eps_T;
    const EffectiveErrorRates eff = effective_error_rates(quality);
    sc.error_margin = eff.fast - quality.eps_T;
  } else {
    quality.eps_T = error_threshold_default(quality, p.e_margin);
    sc.error_margin = p.e_margin;
  }

  LinkModel link;
  link.h0 = p.h0_linear ? *p.h0_linear : db_to_linear(p.h0_db.value_or(-50.0));
  link.altitude = p.altitude_m;
  link.mes_position = {0.0, 0.0};
  link.B = p.B_hz;
  link.n = p.n;
  link.chi_sq = p.chi_sq_w;

  sc.mes.F = p.F_hz;
  sc.uavs.reserve(static_cast<std::size_t>(p.n));
  for (int i = 0; i < p.n; ++i) {
    UavNode node{task, profile, link, quality};
    const double offset =
        p.offsets_m.empty() ? p.offset_m : p.offsets_m[static_cast<std::size_t>(i)];
    node.link.uav_position = {offset, 0.0};
    sc.uavs.push_back(std::move(node));
  }
  validate(sc);
  return sc;
}

inline std::vector<double> resolve_sweep_values(const nlohmann::json& j) {
  std::vector<double> values;
  if (j.contains("values")) {
    if (!j.at("values").is_array() || j.at("values").empty()) {
      throw std::invalid_argument("values: expected a non-empty array");
    }
    for (const auto& v : j.at("values")) values.push_back(v.get<double>());
    return values;
  }
  if (!j.contains("start") || !j.contains("stop") || !j.contains("step")) {
    throw std::invalid_argument("sweep: give either values or start/stop/step");
  }
  const double start = get_number(j, "start");
  const double stop = get_number(j, "stop");
  const double step = get_number(j, "step");
  if (!(step > 0.0)) throw std::invalid_argument("step: must be > 0");
  if (stop < start) throw std::invalid_argument("stop: must be >= start");
  // Index-based generation; accumulation would drift past the endpoint.
  const long count = static_cast<long>(std::floor((stop - start) / step + 1e-9));
  for (long k = 0; k <= count; ++k) {
    double v = start + step * static_cast<double>(k);
    if (std::abs(v - stop) <= step * 1e-9) v = stop;
    values.push_back(v);
  }
  return values;
}

inline SweepSpec parse_sweep(const nlohmann::json& j, std::size_t index) {
  static const std::set<std::string> known = {"parameter", "start",      "stop",  "step",
                                              "values",    "strategies", "output"};
  for (const auto& item : j.items()) {
    if (!known.count(item.key())) {
      throw std::invalid_argument("sweeps[" + std::to_string(index) + "]." + item.key() +
                                  ": unknown key");
    }
  }
  SweepSpec spec;
  if (!j.contains("parameter")) {
    throw std::invalid_argument("sweeps[" + std::to_string(index) + "].parameter: required");
  }
  spec.parameter = parse_sweep_parameter(j.at("parameter").get<std::string>());
  spec.values = resolve_sweep_values(j);
  if (j.contains("strategies")) {
    for (const auto& s : j.at("strategies")) {
      spec.strategies.push_back(parse_strategy(s.get<std::string>()));
    }
  } else {
    spec.strategies = {Strategy::TotallyLocal, Strategy::TotallyOffload, Strategy::OptimalBinary,
                       Strategy::OptimalPartial, Strategy::QualitySplit};
  }
  spec.output = j.value("output", std::string(to_string(spec.parameter)) + "_sweep.csv");
  return spec;
}

}  // namespace detail

inline AppConfig parse_config(const nlohmann::json& j) {
  for (const auto& item : j.items()) {
    if (item.key() != "scenario" && item.key() != "sweeps") {
      throw std::invalid_argument(item.key() + ": unknown top-level key");
    }
  }
  AppConfig cfg;
  const nlohmann::json scenario_json =
      j.contains("scenario") ? j.at("scenario") : nlohmann::json::object();
  cfg.scenario = detail::expand_scenario(detail::parse_scenario_params(scenario_json));
  if (j.contains("sweeps")) {
    std::size_t index = 0;
    for (const auto& sj : j.at("sweeps")) {
      cfg.sweeps.push_back(detail::parse_sweep(sj, index++));
    }
  }
  return cfg;
}

inline AppConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("config: parse error in '" + path + "': " + e.what());
  }
  return parse_config(j);
}

/// The stock simulation setup as a config document.
inline nlohmann::json default_config_json() {
  nlohmann::json j;
  j["scenario"] = {
      {"n", 2},          {"s_bits", 1e6},       {"cycles_per_bit", 1000.0},
      {"sigma_s", 10.0}, {"theta", 0.5},        {"eta", 0.5},
      {"gamma", 7.0},    {"f_l_hz", 1e9},       {"F_hz", 1e10},
      {"eps_L", 0.3},    {"eps_H", 0.2},        {"e", 0.1},
      {"rho_s", 8.0},    {"xi_j", 8.0},         {"kappa", 1e-28},
      {"P_t_w", 10.0},   {"P_I_w", 5.0},        {"chi_sq_w", 7.9e-13},
      {"B_hz", 1e7},     {"h0_db", -50.0},      {"altitude_m", 100.0},
      {"offset_m", 20.0},{"strategy", "PO"},
  };
  j["sweeps"] = nlohmann::json::array();
  return j;
}

inline Scenario default_scenario() {
  return parse_config(default_config_json()).scenario;
}

/// Fully resolved per-UAV view of a scenario, for the metadata sidecar.
inline nlohmann::json resolved_scenario_json(const Scenario& sc) {
  nlohmann::json uavs = nlohmann::json::array();
  for (const UavNode& node : sc.uavs) {
    uavs.push_back({
        {"s_bits", node.task.s},
        {"c_cycles", node.task.c},
        {"sigma_s", node.task.sigma},
        {"gamma", node.task.gamma},
        {"f_l_hz", node.profile.f_l},
        {"kappa", node.profile.kappa},
        {"P_t_w", node.profile.P_t},
        {"P_I_w", node.profile.P_I},
        {"rho_s", node.profile.rho},
        {"xi_j", node.profile.xi},
        {"theta", node.profile.theta},
        {"eta", node.quality.eta},
        {"eps_L", node.quality.eps_L},
        {"eps_H", node.quality.eps_H},
        {"eps_T", node.quality.eps_T},
        {"h0_linear", node.link.h0},
        {"altitude_m", node.link.altitude},
        {"uav_position_m", {node.link.uav_position.x, node.link.uav_position.y}},
        {"mes_position_m", {node.link.mes_position.x, node.link.mes_position.y}},
        {"B_hz", node.link.B},
        {"n", node.link.n},
        {"chi_sq_w", node.link.chi_sq},
    });
  }
  return {{"uavs", uavs},
          {"F_hz", sc.mes.F},
          {"allocation_hz", sc.mes.allocation},
          {"strategy", to_string(sc.strategy)},
          {"e", sc.error_margin}};
}

}  // namespace uavoff
