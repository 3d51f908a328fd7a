#pragma once

#include <charconv>
#include <cmath>
#include <string>

namespace uavoff {

// Shortest round-trip decimal form; keeps emitted files byte-stable.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace uavoff
