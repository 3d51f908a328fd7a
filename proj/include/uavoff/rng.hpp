#pragma once

#include <cstdint>
#include <random>

namespace uavoff {

// Seeded uniform source built on the fully specified mt19937_64 engine, with
// the double conversion done by hand so streams are identical on every
// platform and standard library.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Multiplicative +/-50% perturbation.
  double scale_half(double value) { return value * uniform(0.5, 1.5); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace uavoff
