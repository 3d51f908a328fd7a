#pragma once

#include <cmath>

#include "uavoff/types.hpp"

namespace uavoff {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

/// LOS channel power gain: h0 scaled by the inverse squared 3-D distance.
inline double channel_gain(const LinkModel& link) {
  const double dx = link.mes_position.x - link.uav_position.x;
  const double dy = link.mes_position.y - link.uav_position.y;
  return link.h0 / (link.altitude * link.altitude + dx * dx + dy * dy);
}

/// Uplink rate on the UAV's share of the band, B/n.
/// The gain from channel_gain() is already a power gain, so the SNR is
/// P_t * gain / chi_sq without further squaring.
inline double data_rate(const LinkModel& link, const UavProfile& uav) {
  const double snr = uav.P_t * channel_gain(link) / link.chi_sq;
  return link.B / static_cast<double>(link.n) * std::log2(1.0 + snr);
}

}  // namespace uavoff
