#pragma once

#include <cmath>
#include <cstdint>

namespace hg {

/// Counter-friendly splitmix64 stream with Box-Muller normals.
/// Substreams are derived from (seed, index) so Monte Carlo sweeps can be
/// replayed sample-by-sample regardless of how the loop is organised.
class RngStream {
 public:
  explicit RngStream(uint64_t seed) : state_(mix(mix(seed ^ 0x6A09E667F3BCC909ull))) {}

  static RngStream derived(uint64_t seed, uint64_t index) {
    RngStream s(seed);
    s.state_ ^= mix(index + 0x9E3779B97F4A7C15ull);
    s.state_ = mix(s.state_);
    s.have_cached_ = false;
    return s;
  }

  uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix(state_);
  }

  /// Uniform in [0,1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal (Box-Muller, pairwise cached).
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * M_PI * uniform();
    cached_ = r * std::sin(phi);
    have_cached_ = true;
    return r * std::cos(phi);
  }

 private:
  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  uint64_t state_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace hg
