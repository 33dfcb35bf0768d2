// LoS air-ground link budget: free-space path loss plus a fixed excess
// term, and the Shannon rate of an allocated (power, bandwidth) slice.
#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gamatr/math/vec3.hpp"
#include "gamatr/scenario.hpp"

namespace gamatr::env {

inline constexpr double kSpeedOfLight = 2.99792458e8;  // m/s

inline double dbm_to_watts(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }

inline double watts_to_dbm(double w) { return 10.0 * std::log10(w * 1e3); }

inline double path_loss_db(const Vec3& uav_pos, const Vec3& gu_pos, const ScenarioConfig& cfg) {
  const double d = distance(uav_pos, gu_pos);
  if (d <= 0.0) throw std::domain_error("path_loss_db: coincident transmitter and receiver");
  return 20.0 * std::log10(4.0 * std::numbers::pi * cfg.f_c_hz * d / kSpeedOfLight) + cfg.sigma_los_db;
}

// Received power applies the path loss as a dB subtraction on the transmit
// power; the two conversions collapse to one linear attenuation factor,
// which keeps rate == bandwidth exact at unit SNR.
inline double link_rate_bps(double p_alloc_w, double b_alloc_hz, double pl_db, bool paired,
                            const ScenarioConfig& cfg) {
  if (p_alloc_w < 0.0 || b_alloc_hz < 0.0)
    throw std::domain_error("link_rate_bps: negative power or bandwidth");
  if (!paired) return 0.0;
  if (b_alloc_hz <= 0.0) throw std::domain_error("link_rate_bps: zero bandwidth on a paired link");
  const double p_rec_w = p_alloc_w * std::pow(10.0, -pl_db / 10.0);
  return b_alloc_hz * std::log2(1.0 + p_rec_w / (cfg.n0_w_per_hz * b_alloc_hz));
}

}  // namespace gamatr::env
