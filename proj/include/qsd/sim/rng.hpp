// Copyright 2026 The qsd Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace qsd::sim {

/// SplitMix64 output function. The whole simulation layer draws through it
/// so results are bit-identical across platforms and thread schedules; the
/// standard library distributions are deliberately not used.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Counter-based generator supporting hierarchical splitting: fork(k) derives
/// an independent stream for label k without consuming draws from the parent.
/// A sweep forks per point, per trial, and per element, which makes results
/// independent of how work is scheduled across threads.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : key_(splitmix64(seed ^ 0xA5A5A5A55A5A5A5AULL)) {}

  SplitRng fork(std::uint64_t label) const {
    return SplitRng(key_ ^ splitmix64(label ^ 0xD1B54A32D192ED03ULL));
  }

  std::uint64_t next_u64() { return splitmix64(key_ + 0x9E3779B97F4A7C15ULL * (++ctr_)); }

  /// Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller on counter draws.
  double next_gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(phi);
    has_spare_ = true;
    return r * std::cos(phi);
  }

  /// Poisson draw by exponential inter-arrival sums; O(mean).
  std::uint64_t next_poisson(double mean) {
    if (!(mean > 0.0)) return 0;
    std::uint64_t k = 0;
    double t = 0.0;
    for (;;) {
      const double u = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
      t -= std::log(u) / mean;
      if (t > 1.0) return k;
      ++k;
    }
  }

 private:
  std::uint64_t key_;
  std::uint64_t ctr_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace qsd::sim
