#pragma once

#include <cstdint>
#include <random>

namespace gmvi {

// All seeded instance families draw from std::mt19937_64 (the 64-bit
// Mersenne Twister, whose output sequence is fixed by the C++ standard).
// Uniform reals are formed from the top 53 bits of one draw so the mapping
// does not depend on the standard library's distribution implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// u in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// a + (b - a) * u with u in [0, 1).
  double uniform(double a, double b) { return a + (b - a) * unit(); }

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gmvi
