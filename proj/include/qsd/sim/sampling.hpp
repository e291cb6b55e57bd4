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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qsd/measurement.hpp"
#include "qsd/sim/rng.hpp"

namespace qsd::sim {

/// Click counts of one simulated run, ordered like the distribution that
/// produced them.
struct TrialBatch {
  std::uint64_t n_trials = 0;
  std::vector<std::pair<std::string, std::uint64_t>> counts;
  std::uint64_t seed = 0;
  std::string prepared;

  std::uint64_t count(const std::string& label) const {
    for (const auto& [l, c] : counts)
      if (l == label) return c;
    return 0;
  }

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto& [l, c] : counts) t += c;
    return t;
  }
};

/// Index of the outcome a uniform draw u selects. Zero-probability outcomes
/// have empty intervals and can never be selected.
inline std::size_t sample_category(const ClickDistribution& dist, double u) {
  double cum = 0.0;
  std::size_t last_positive = 0;
  bool seen_positive = false;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const double p = dist.at(i).second;
    if (p > 0.0) {
      last_positive = i;
      seen_positive = true;
      cum += p;
      if (u < cum) return i;
    }
  }
  if (!seen_positive) throw validation_error("sample_category: all probabilities zero");
  return last_positive;  // u landed in the round-off sliver past the last bin
}

/// Multinomial sample of n clicks. Each trial uses its own forked stream, so
/// the counts do not depend on batching or thread scheduling.
inline TrialBatch sample_clicks(const ClickDistribution& dist, std::uint64_t n,
                                std::uint64_t seed, std::string prepared = {}) {
  if (n < 1) throw validation_error("sample_clicks: need at least one trial");
  TrialBatch batch;
  batch.n_trials = n;
  batch.seed = seed;
  batch.prepared = std::move(prepared);
  batch.counts.reserve(dist.size());
  for (const auto& [label, p] : dist) batch.counts.emplace_back(label, 0);

  const SplitRng root(seed);
  for (std::uint64_t t = 0; t < n; ++t) {
    SplitRng rng = root.fork(t);
    ++batch.counts[sample_category(dist, rng.next_double())].second;
  }
  return batch;
}

}  // namespace qsd::sim
