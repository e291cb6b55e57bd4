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
#include <string>

#include "qsd/measurement.hpp"
#include "qsd/sim/sampling.hpp"

namespace qsd::sim {

/// z for a central 95% normal interval.
inline constexpr double kZ95 = 1.959963984540054;

struct WilsonInterval {
  double low = 0.0;
  double high = 0.0;
};

/// Wilson score interval for a binomial proportion. Chosen over the normal
/// approximation for sane behavior at proportions near 0 and 1, which ideal
/// unambiguous-discrimination error rates sit at.
inline WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t total,
                                      double z = kZ95) {
  if (total == 0) throw validation_error("wilson_interval: no trials");
  const double n = static_cast<double>(total);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

struct Estimate {
  double value = 0.0;
  WilsonInterval ci;
};

/// Empirical confidence of a conclusive outcome: counts on that detector
/// from the batch where it is correct, over counts on that detector from
/// both batches. Requires one batch per prepared state with equal trials
/// (equal priors).
inline Estimate estimate_confidence(const TrialBatch& batch1, const TrialBatch& batch2,
                                    const std::string& outcome_label) {
  if (batch1.n_trials != batch2.n_trials)
    throw validation_error("estimate_confidence: batches must have equal trial counts");
  const auto state = labels::announced_state(outcome_label);
  if (!state)
    throw validation_error("estimate_confidence: outcome " + outcome_label +
                           " announces no state");
  const std::uint64_t correct = (*state == 0 ? batch1 : batch2).count(outcome_label);
  const std::uint64_t total = batch1.count(outcome_label) + batch2.count(outcome_label);
  if (total == 0)
    throw validation_error("estimate_confidence: no detections on " + outcome_label);
  return {static_cast<double>(correct) / static_cast<double>(total),
          wilson_interval(correct, total)};
}

/// Wrong-detector counts over all conclusive counts for one prepared state.
inline Estimate error_rate(const TrialBatch& batch, int prepared) {
  if (prepared != 1 && prepared != 2)
    throw validation_error("error_rate: prepared state must be 1 or 2");
  const std::uint64_t on1 = batch.count(labels::kApd1) + batch.count(labels::kState1);
  const std::uint64_t on2 = batch.count(labels::kApd2) + batch.count(labels::kState2);
  const std::uint64_t conclusive = on1 + on2;
  if (conclusive == 0) throw validation_error("error_rate: no conclusive counts");
  const std::uint64_t wrong = prepared == 1 ? on2 : on1;
  return {static_cast<double>(wrong) / static_cast<double>(conclusive),
          wilson_interval(wrong, conclusive)};
}

}  // namespace qsd::sim
