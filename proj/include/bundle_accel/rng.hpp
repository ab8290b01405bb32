#pragma once

#include <cmath>
#include <cstdint>

#include "bundle_accel/vec.hpp"

namespace bundle_accel {

// splitmix64: the fixed 64-bit generator behind every seeded quantity in this
// project (random instances, probe points, start points). Chosen because it
// is tiny, fast, and produces the same stream on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1), 53 bits
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // standard normal, Box-Muller on consecutive uniforms
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u = 0.0;
    do {
      u = uniform();
    } while (u <= 0.0);
    const double v = uniform();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double t = 2.0 * 3.141592653589793 * v;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  Vec uniform_vec(std::size_t n) {
    Vec x(n);
    for (auto& xi : x) xi = uniform();
    return x;
  }

  Vec normal_vec(std::size_t n) {
    Vec x(n);
    for (auto& xi : x) xi = normal();
    return x;
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace bundle_accel
