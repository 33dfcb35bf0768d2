// Scenario configuration: physical constants, counts, bounds and the
// episode discount shared by the environment and the trainers.
#pragma once

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gamatr/config_text.hpp"

namespace gamatr {

struct ScenarioConfig {
  int num_uavs = 2;
  int num_gus = 4;
  double area_half_extent = 100.0;  // ground square is [-a, a] x [-a, a]
  double altitude_min = 10.0;
  double altitude_max = 100.0;
  double p_total_dbm = 10.0;
  double b_total_hz = 30e6;
  double f_c_hz = 2e9;
  double n0_w_per_hz = 1e-17;
  double b_min_hz = 0.1e6;
  double p_min_w = 1e-5;
  double sigma_los_db = 1.0;  // excess loss on top of free-space
  double alpha = 2.0;         // distance exponent for scheme 3
  double c1 = 0.5;            // power mix: distance weight
  double c2 = 0.5;            // power mix: random weight
  double c3 = 0.5;            // bandwidth mix: distance weight
  double c4 = 0.5;            // bandwidth mix: random weight
  double lambda_fair = 0.3;
  int t_max = 200;
  double dt_decision = 1.0;
  double uav_max_speed = 20.0;
  double gu_max_speed = 10.0;
  double gamma = 0.99;
  std::uint64_t seed = 1;

  double p_total_w() const { return std::pow(10.0, p_total_dbm / 10.0) * 1e-3; }

  void validate() const {
    if (num_uavs < 1) throw std::invalid_argument("scenario: num_uavs must be >= 1");
    if (num_gus < num_uavs) throw std::invalid_argument("scenario: num_gus must be >= num_uavs");
    if (!(area_half_extent > 0.0)) throw std::invalid_argument("scenario: area_half_extent must be > 0");
    if (!(altitude_min > 0.0) || !(altitude_max >= altitude_min))
      throw std::invalid_argument("scenario: altitude_range must satisfy 0 < min <= max");
    if (c1 + c2 != 1.0) throw std::invalid_argument("scenario: c1 + c2 must equal 1 exactly");
    if (c3 + c4 != 1.0) throw std::invalid_argument("scenario: c3 + c4 must equal 1 exactly");
    if (c1 < 0.0 || c2 < 0.0 || c3 < 0.0 || c4 < 0.0)
      throw std::invalid_argument("scenario: mixing weights must be nonnegative");
    if (b_min_hz * num_gus > b_total_hz)
      throw std::invalid_argument("scenario: b_min_hz * num_gus exceeds b_total_hz");
    if (p_min_w * num_gus > p_total_w())
      throw std::invalid_argument("scenario: p_min_w * num_gus exceeds total power");
    if (!(gu_max_speed < uav_max_speed))
      throw std::invalid_argument("scenario: gu_max_speed must be < uav_max_speed");
    if (gamma < 0.0 || gamma > 1.0) throw std::invalid_argument("scenario: gamma must be in [0, 1]");
    if (t_max < 1) throw std::invalid_argument("scenario: t_max must be >= 1");
    if (!(dt_decision > 0.0)) throw std::invalid_argument("scenario: dt_decision must be > 0");
    if (!(uav_max_speed > 0.0)) throw std::invalid_argument("scenario: uav_max_speed must be > 0");
    if (gu_max_speed < 0.0) throw std::invalid_argument("scenario: gu_max_speed must be >= 0");
    if (!(f_c_hz > 0.0) || !(b_total_hz > 0.0) || !(n0_w_per_hz > 0.0))
      throw std::invalid_argument("scenario: f_c_hz, b_total_hz, n0_w_per_hz must be > 0");
    if (b_min_hz < 0.0 || p_min_w < 0.0)
      throw std::invalid_argument("scenario: b_min_hz and p_min_w must be >= 0");
    if (alpha < 0.0) throw std::invalid_argument("scenario: alpha must be >= 0");
    if (lambda_fair < 0.0) throw std::invalid_argument("scenario: lambda_fair must be >= 0");
  }
};

inline void apply_scenario_entry(ScenarioConfig& cfg, const ConfigEntry& e) {
  const std::string& k = e.key;
  const std::string& v = e.value;
  if (k == "num_uavs") cfg.num_uavs = static_cast<int>(parse_int(v, k));
  else if (k == "num_gus") cfg.num_gus = static_cast<int>(parse_int(v, k));
  else if (k == "area_half_extent") cfg.area_half_extent = parse_double(v, k);
  else if (k == "altitude_range") {
    std::istringstream ss(v);
    double lo = 0.0, hi = 0.0;
    if (!(ss >> lo >> hi)) throw std::invalid_argument("config key 'altitude_range': expected two numbers");
    std::string rest;
    if (ss >> rest) throw std::invalid_argument("config key 'altitude_range': expected two numbers");
    cfg.altitude_min = lo;
    cfg.altitude_max = hi;
  } else if (k == "p_total_dbm") cfg.p_total_dbm = parse_double(v, k);
  else if (k == "b_total_hz") cfg.b_total_hz = parse_double(v, k);
  else if (k == "f_c_hz") cfg.f_c_hz = parse_double(v, k);
  else if (k == "n0_w_per_hz") cfg.n0_w_per_hz = parse_double(v, k);
  else if (k == "b_min_hz") cfg.b_min_hz = parse_double(v, k);
  else if (k == "p_min_w") cfg.p_min_w = parse_double(v, k);
  else if (k == "sigma_los_db") cfg.sigma_los_db = parse_double(v, k);
  else if (k == "alpha") cfg.alpha = parse_double(v, k);
  else if (k == "c1") cfg.c1 = parse_double(v, k);
  else if (k == "c2") cfg.c2 = parse_double(v, k);
  else if (k == "c3") cfg.c3 = parse_double(v, k);
  else if (k == "c4") cfg.c4 = parse_double(v, k);
  else if (k == "lambda_fair") cfg.lambda_fair = parse_double(v, k);
  else if (k == "t_max") cfg.t_max = static_cast<int>(parse_int(v, k));
  else if (k == "dt_decision") cfg.dt_decision = parse_double(v, k);
  else if (k == "uav_max_speed") cfg.uav_max_speed = parse_double(v, k);
  else if (k == "gu_max_speed") cfg.gu_max_speed = parse_double(v, k);
  else if (k == "gamma") cfg.gamma = parse_double(v, k);
  else if (k == "seed") cfg.seed = static_cast<std::uint64_t>(parse_int(v, k));
  else throw std::invalid_argument("scenario config: unknown key '" + k + "'");
}

inline ScenarioConfig parse_scenario(const std::vector<ConfigEntry>& entries) {
  ScenarioConfig cfg;
  for (const auto& e : entries) apply_scenario_entry(cfg, e);
  cfg.validate();
  return cfg;
}

inline ScenarioConfig parse_scenario_text(const std::string& text) {
  const ConfigDoc doc = parse_config_text(text);
  // accept either a flat document or one with a [scenario] section
  if (const auto* sec = doc.find("scenario")) return parse_scenario(*sec);
  return parse_scenario(doc.sections.front().second);
}

inline std::string scenario_to_text(const ScenarioConfig& cfg) {
  std::ostringstream os;
  os << "num_uavs = " << cfg.num_uavs << "\n";
  os << "num_gus = " << cfg.num_gus << "\n";
  os << "area_half_extent = " << format_double(cfg.area_half_extent) << "\n";
  os << "altitude_range = " << format_double(cfg.altitude_min) << " " << format_double(cfg.altitude_max) << "\n";
  os << "p_total_dbm = " << format_double(cfg.p_total_dbm) << "\n";
  os << "b_total_hz = " << format_double(cfg.b_total_hz) << "\n";
  os << "f_c_hz = " << format_double(cfg.f_c_hz) << "\n";
  os << "n0_w_per_hz = " << format_double(cfg.n0_w_per_hz) << "\n";
  os << "b_min_hz = " << format_double(cfg.b_min_hz) << "\n";
  os << "p_min_w = " << format_double(cfg.p_min_w) << "\n";
  os << "sigma_los_db = " << format_double(cfg.sigma_los_db) << "\n";
  os << "alpha = " << format_double(cfg.alpha) << "\n";
  os << "c1 = " << format_double(cfg.c1) << "\n";
  os << "c2 = " << format_double(cfg.c2) << "\n";
  os << "c3 = " << format_double(cfg.c3) << "\n";
  os << "c4 = " << format_double(cfg.c4) << "\n";
  os << "lambda_fair = " << format_double(cfg.lambda_fair) << "\n";
  os << "t_max = " << cfg.t_max << "\n";
  os << "dt_decision = " << format_double(cfg.dt_decision) << "\n";
  os << "uav_max_speed = " << format_double(cfg.uav_max_speed) << "\n";
  os << "gu_max_speed = " << format_double(cfg.gu_max_speed) << "\n";
  os << "gamma = " << format_double(cfg.gamma) << "\n";
  os << "seed = " << cfg.seed << "\n";
  return os.str();
}

}  // namespace gamatr
