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

#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qsd/sim/estimators.hpp"
#include "qsd/sim/imperfections.hpp"
#include "qsd/sim/sampling.hpp"
#include "qsd/strategies.hpp"

namespace qsd::sim {

inline double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

/// One full sweep: strategy, angle grid (degrees), the state family
/// parameterization, trial counts, seeding, and imperfections. Exactly one
/// state parameterization is allowed: `p` for the polarization pair, `rho0`
/// for the two-path pair; minerror accepts either family.
struct SweepConfig {
  Strategy strategy = Strategy::MaxConfidence;
  std::vector<double> angles_deg;
  std::optional<double> p;
  std::optional<Rho0Params> rho0;
  std::uint64_t n_trials = 100000;
  std::uint64_t seed = 1;
  ImperfectionModel imperfection;
  int workers = 1;
  bool poisson = false;     // draw per-point trial counts from a Poisson law
  double dwell_s = 1.0;     // Poisson dwell time per point
  double rate_hz = 2000.0;  // Poisson mean count rate

  void validate() const {
    if (angles_deg.empty()) throw validation_error("SweepConfig: empty angle grid");
    for (double a : angles_deg) {
      if (!(a >= 0.0) || a > 45.0 + 1e-9)
        throw validation_error("SweepConfig: angles must lie in [0, 45] degrees");
      if (strategy != Strategy::MaxConfidence && !(a > 0.0))
        throw validation_error("SweepConfig: alpha = 0 is degenerate for this strategy");
    }
    const bool has_p = p.has_value(), has_rho0 = rho0.has_value();
    switch (strategy) {
      case Strategy::MaxConfidence:
        if (!has_p || has_rho0)
          throw validation_error("SweepConfig: mc sweeps take p and no rho0");
        break;
      case Strategy::UnambiguousUsd:
        if (has_p || !has_rho0)
          throw validation_error("SweepConfig: usd sweeps take rho0 and no p");
        break;
      case Strategy::MinError:
        if (has_p == has_rho0)
          throw validation_error("SweepConfig: minerror sweeps take exactly one of p or rho0");
        break;
    }
    if (has_p && (!(*p > 0.0) || *p > 1.0))
      throw validation_error("SweepConfig: p must be in (0, 1]");
    if (n_trials < 1 && !poisson) throw validation_error("SweepConfig: n_trials must be >= 1");
    if (workers < 1) throw validation_error("SweepConfig: workers must be >= 1");
    if (poisson && (!(dwell_s > 0.0) || !(rate_hz > 0.0)))
      throw validation_error("SweepConfig: Poisson mode needs positive dwell and rate");
    imperfection.validate();
    if (strategy == Strategy::MinError &&
        (imperfection.has_jitter() || !imperfection.hwp_static_offset.empty()))
      throw validation_error(
          "SweepConfig: minerror has no optical network; only prep_misalignment applies");
  }
};

struct FractionCi {
  double low = 0.0;
  double high = 0.0;
};

/// One (angle, prepared state) sweep point. Fractions are normalized by the
/// APD counts alone, the way count rates are reported on a real bench; under
/// waveplate jitter a sliver of light exits dark ports and is counted in
/// n_lost but not in any fraction.
struct SweepRow {
  Strategy strategy;
  double angle_deg = 0.0;
  std::string prepared;
  std::uint64_t n_trials = 0;
  std::uint64_t n_apd0 = 0, n_apd0p = 0, n_apd1 = 0, n_apd2 = 0, n_lost = 0;
  double frac_inconclusive = 0.0, frac_apd1 = 0.0, frac_apd2 = 0.0;
  double error_rate = 0.0;
  FractionCi ci_inconclusive, ci_apd1, ci_apd2, ci_error;
  double analytic_q = 0.0, analytic_c = 0.0, analytic_helstrom = 0.0;
};

struct SweepResult {
  SweepConfig config;
  std::vector<SweepRow> rows;  // angle-major, prepared-state-minor
};

namespace detail {

inline std::uint64_t point_seed(std::uint64_t master, std::uint64_t point) {
  return splitmix64(master ^ splitmix64(0x5EED0000u + point));
}

struct PointTask {
  double angle_rad = 0.0;
  std::string prepared_label;
  std::optional<CircuitSpec> spec;                  // mc / usd
  std::optional<ClickDistribution> minerror_dist;   // minerror only
  double analytic_q = 0.0, analytic_c = 0.0, analytic_helstrom = 0.0;
};

inline PointTask make_point_task(const SweepConfig& cfg, double angle_deg, int prep_index) {
  PointTask task;
  task.angle_rad = deg_to_rad(angle_deg);
  switch (cfg.strategy) {
    case Strategy::MaxConfidence: {
      const PartialPolarizationParams pol(*cfg.p, task.angle_rad);
      const Sign sign = prep_index == 0 ? Sign::Plus : Sign::Minus;
      task.prepared_label = prep_index == 0 ? "plus" : "minus";
      task.spec = McSpec{pol, sign};
      task.analytic_q = mc_failure_prob(pol.p, pol.beta);
      task.analytic_c = max_confidence(pol.p, pol.beta);
      task.analytic_helstrom = helstrom_error(DiscriminationProblem::equal_priors(
          make_partially_polarized(pol, Sign::Plus), make_partially_polarized(pol, Sign::Minus)));
      break;
    }
    case Strategy::UnambiguousUsd: {
      task.prepared_label = prep_index == 0 ? "rho1" : "rho2";
      task.spec = UsdSpec{task.angle_rad, prep_index + 1, *cfg.rho0};
      task.analytic_q = usd_failure_prob(task.angle_rad);
      task.analytic_c = 1.0;
      auto [rho1, rho2] = make_mixed_pair(MixedPairParams(task.angle_rad, *cfg.rho0));
      task.analytic_helstrom =
          helstrom_error(DiscriminationProblem::equal_priors(std::move(rho1), std::move(rho2)));
      break;
    }
    case Strategy::MinError: {
      DiscriminationProblem problem =
          cfg.p ? DiscriminationProblem::equal_priors(
                      make_partially_polarized(PartialPolarizationParams(*cfg.p, task.angle_rad),
                                               Sign::Plus),
                      make_partially_polarized(PartialPolarizationParams(*cfg.p, task.angle_rad),
                                               Sign::Minus))
                : [&] {
                    auto [r1, r2] = make_mixed_pair(MixedPairParams(task.angle_rad, *cfg.rho0));
                    return DiscriminationProblem::equal_priors(std::move(r1), std::move(r2));
                  }();
      task.prepared_label = cfg.p ? (prep_index == 0 ? "plus" : "minus")
                                  : (prep_index == 0 ? "rho1" : "rho2");
      const Povm povm = minerror_povm(problem);
      const DensityOperator& prepared = prep_index == 0 ? problem.rho1 : problem.rho2;
      task.minerror_dist = born_probabilities(
          povm, mix_toward_support(prepared, cfg.imperfection.prep_misalignment));
      task.analytic_q = 0.0;
      task.analytic_c = confidence_of(povm, labels::kState1, problem);
      task.analytic_helstrom = helstrom_error(problem);
      break;
    }
  }
  return task;
}

inline TrialBatch run_point_trials(const SweepConfig& cfg, const PointTask& task,
                                   std::uint64_t seed) {
  std::uint64_t n = cfg.n_trials;
  if (cfg.poisson) {
    SplitRng rng(splitmix64(seed ^ 0x706F697373ULL));
    n = std::max<std::uint64_t>(1, rng.next_poisson(cfg.rate_hz * cfg.dwell_s));
  }

  if (task.minerror_dist) return sample_clicks(*task.minerror_dist, n, seed, task.prepared_label);

  const optics::BuiltCircuit built = build_circuit(*task.spec);
  const DensityOperator input = mix_toward_support(built.input, cfg.imperfection.prep_misalignment);
  const optics::OpticalCircuit base = cfg.imperfection.hwp_static_offset.empty()
                                          ? built.circuit
                                          : built.circuit.with_hwp_shifts(cfg.imperfection.hwp_static_offset);

  if (!cfg.imperfection.has_jitter())
    return sample_clicks(optics::propagate(base, input), n, seed, task.prepared_label);

  // Per-trial circuit rebuild: each trial draws its own waveplate errors.
  TrialBatch batch;
  batch.n_trials = n;
  batch.seed = seed;
  batch.prepared = task.prepared_label;
  for (const std::string& label : base.detector_labels()) batch.counts.emplace_back(label, 0);

  const SplitRng root(seed);
  for (std::uint64_t t = 0; t < n; ++t) {
    SplitRng trial_rng = root.fork(t);
    const auto shifts = jitter_shifts(base, cfg.imperfection, trial_rng.fork(0xE1E3ULL));
    const ClickDistribution dist = optics::propagate(base.with_hwp_shifts(shifts), input);
    ++batch.counts[sample_category(dist, trial_rng.next_double())].second;
  }
  return batch;
}

inline SweepRow make_row(const SweepConfig& cfg, double angle_deg, const PointTask& task,
                         const TrialBatch& batch, int prep_index) {
  SweepRow row;
  row.strategy = cfg.strategy;
  row.angle_deg = angle_deg;
  row.prepared = task.prepared_label;
  row.n_trials = batch.n_trials;
  row.n_apd0 = batch.count(labels::kApd0) + batch.count(labels::kInconclusive);
  row.n_apd0p = batch.count(labels::kApd0p);
  row.n_apd1 = batch.count(labels::kApd1) + batch.count(labels::kState1);
  row.n_apd2 = batch.count(labels::kApd2) + batch.count(labels::kState2);
  for (const auto& [label, c] : batch.counts)
    if (labels::is_loss(label)) row.n_lost += c;

  const std::uint64_t apd_total = row.n_apd0 + row.n_apd0p + row.n_apd1 + row.n_apd2;
  const std::uint64_t inconclusive = row.n_apd0 + row.n_apd0p;
  const std::uint64_t conclusive = row.n_apd1 + row.n_apd2;
  const auto frac = [&](std::uint64_t k) {
    return apd_total ? static_cast<double>(k) / static_cast<double>(apd_total) : 0.0;
  };
  row.frac_inconclusive = frac(inconclusive);
  row.frac_apd1 = frac(row.n_apd1);
  row.frac_apd2 = frac(row.n_apd2);
  if (apd_total) {
    const auto wi = [&](std::uint64_t k) {
      const WilsonInterval w = wilson_interval(k, apd_total);
      return FractionCi{w.low, w.high};
    };
    row.ci_inconclusive = wi(inconclusive);
    row.ci_apd1 = wi(row.n_apd1);
    row.ci_apd2 = wi(row.n_apd2);
  }
  if (conclusive) {
    const Estimate e = error_rate(batch, prep_index + 1);
    row.error_rate = e.value;
    row.ci_error = {e.ci.low, e.ci.high};
  } else {
    row.error_rate = std::nan("");
    row.ci_error = {std::nan(""), std::nan("")};
  }
  row.analytic_q = task.analytic_q;
  row.analytic_c = task.analytic_c;
  row.analytic_helstrom = task.analytic_helstrom;
  return row;
}

}  // namespace detail

/// Runs the sweep: one row per (angle, prepared state), deterministic for a
/// fixed seed no matter how many workers execute the points.
inline SweepResult run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const std::size_t n_points = cfg.angles_deg.size() * 2;
  SweepResult result;
  result.config = cfg;
  result.rows.resize(n_points);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  const auto worker = [&] {
    for (;;) {
      const std::size_t pt = next.fetch_add(1);
      if (pt >= n_points) return;
      try {
        const double angle_deg = cfg.angles_deg[pt / 2];
        const int prep_index = static_cast<int>(pt % 2);
        const detail::PointTask task = detail::make_point_task(cfg, angle_deg, prep_index);
        const TrialBatch batch =
            detail::run_point_trials(cfg, task, detail::point_seed(cfg.seed, pt));
        result.rows[pt] = detail::make_row(cfg, angle_deg, task, batch, prep_index);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  if (cfg.workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(cfg.workers));
    for (int w = 0; w < cfg.workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return result;
}

/// Rebuilds the sampled batch of a sweep row, for estimator cross-checks.
inline TrialBatch batch_from_row(const SweepRow& row) {
  TrialBatch b;
  b.n_trials = row.n_trials;
  b.prepared = row.prepared;
  b.counts = {{labels::kApd0, row.n_apd0},
              {labels::kApd0p, row.n_apd0p},
              {labels::kApd1, row.n_apd1},
              {labels::kApd2, row.n_apd2},
              {labels::kLossPrefix + "any", row.n_lost}};
  return b;
}

}  // namespace qsd::sim
