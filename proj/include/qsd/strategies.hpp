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
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "qsd/measurement.hpp"
#include "qsd/state_families.hpp"

// The three optimum discrimination strategies, each given twice: as a closed
// form and as an explicit measurement whose Born statistics must reproduce
// the closed form. Tests hold the two routes against each other.
namespace qsd {

/// Minimum achievable error probability without inconclusive outcomes:
/// (1 - ||eta1 rho1 - eta2 rho2||_1) / 2.
inline double helstrom_error(const DiscriminationProblem& problem) {
  Matrix diff = problem.rho1.matrix() * Complex{problem.eta1, 0.0};
  diff -= problem.rho2.matrix() * Complex{problem.eta2, 0.0};
  return 0.5 * (1.0 - trace_norm(diff));
}

/// Projective measurement achieving the Helstrom bound: outcome State1 is
/// the projector onto the nonnegative eigenspace of eta1 rho1 - eta2 rho2
/// (zero eigenvalues deliberately assigned to State1 so the output is
/// deterministic; for rho1 = rho2 at equal priors this yields {I, 0}).
inline Povm minerror_povm(const DiscriminationProblem& problem) {
  Matrix diff = problem.rho1.matrix() * Complex{problem.eta1, 0.0};
  diff -= problem.rho2.matrix() * Complex{problem.eta2, 0.0};
  const EigenSystem es = eig_hermitian(diff);
  const double zero_band = 1e-12 * std::max(1.0, std::abs(es.values.front()));
  Matrix p1(problem.dim());
  for (std::size_t k = 0; k < es.values.size(); ++k) {
    if (es.values[k] >= -zero_band) {
      const auto v = es.eigenvector(k);
      p1 += outer(v, v);
    }
  }
  p1 = hermitized(p1);
  Matrix p2 = Matrix::identity(problem.dim()) - p1;
  return Povm({{labels::kState1, std::move(p1)}, {labels::kState2, hermitized(p2)}});
}

/// Optimum confidence for the partially polarized pair:
/// 1/2 + p sin(2b) / (2 sqrt(1 - p^2 cos^2(2b))).
inline double max_confidence(double p, double beta) {
  const PartialPolarizationParams check(p, beta);  // range validation
  const double c2 = std::cos(2.0 * check.beta);
  return 0.5 + check.p * std::sin(2.0 * check.beta) /
                   (2.0 * std::sqrt(1.0 - check.p * check.p * c2 * c2));
}

/// Confidence of the projective minimum-error measurement on the same pair:
/// (1 + p sin(2b)) / 2.
inline double minerror_confidence(double p, double beta) {
  const PartialPolarizationParams check(p, beta);
  return 0.5 * (1.0 + check.p * std::sin(2.0 * check.beta));
}

/// Minimum inconclusive probability of the maximum-confidence measurement:
/// p cos(2b).
inline double mc_failure_prob(double p, double beta) {
  const PartialPolarizationParams check(p, beta);
  return check.p * std::cos(2.0 * check.beta);
}

/// Waveplate angle realizing the maximum-confidence filter:
/// arccos sqrt(2 p cos(2b) / (1 + p cos(2b))). Satisfies
/// sin^2(theta3) = (1 - p cos 2b) / (1 + p cos 2b).
inline double theta3_mc(double p, double beta) {
  const PartialPolarizationParams check(p, beta);
  const double q = check.p * std::cos(2.0 * check.beta);
  return std::acos(std::sqrt(std::min(1.0, 2.0 * q / (1.0 + q))));
}

/// Three-outcome maximum-confidence measurement on the polarization qubit.
/// With t = sin(theta3): Inconclusive = diag(1 - t^2, 0) and the conclusive
/// elements are the rank-1 operators (t, +-1)(t, +-1)^T / 2.
inline Povm mc_povm(double p, double beta) {
  const double t = std::sin(theta3_mc(p, beta));
  Matrix inc(2);
  inc(0, 0) = 1.0 - t * t;
  Matrix pi1{{Complex{t * t / 2}, Complex{t / 2}}, {Complex{t / 2}, Complex{0.5}}};
  Matrix pi2{{Complex{t * t / 2}, Complex{-t / 2}}, {Complex{-t / 2}, Complex{0.5}}};
  return Povm({{labels::kInconclusive, std::move(inc)},
               {labels::kState1, std::move(pi1)},
               {labels::kState2, std::move(pi2)}});
}

/// Minimum failure probability for unambiguously discriminating two pure
/// states at equal priors: |<psi1|psi2>|.
inline double pure_usd_failure(const PureState& psi1, const PureState& psi2) {
  return std::abs(overlap(psi1, psi2));
}

/// Minimum failure probability for the rotated mixed pair: cos(2a),
/// independent of the seed state.
inline double usd_failure_prob(double alpha) {
  if (!(alpha >= 0.0) || alpha > std::numbers::pi / 4 + 1e-12)
    throw validation_error("usd_failure_prob: alpha must be in [0, pi/4]");
  return std::cos(2.0 * alpha);
}

namespace detail {
inline void require_usd_alpha(double alpha, const char* who) {
  if (!(alpha > 0.0) || alpha > std::numbers::pi / 4 + 1e-12)
    throw validation_error(std::string(who) +
                           ": alpha must be in (0, pi/4]; alpha = 0 gives a degenerate "
                           "all-failure filter");
}
}  // namespace detail

/// Kraus operators of the four-outcome unambiguous measurement. Each path
/// block carries the filter diag(t, 1) with t = tan(alpha) on its H
/// component; APD1/APD2 analyze the surviving amplitude at +-45 degrees, the
/// failure branches feed APD0 (path 1) and APD0' (path 2).
inline KrausSet usd_kraus(double alpha) {
  detail::require_usd_alpha(alpha, "usd_kraus");
  const double t = std::tan(alpha);
  const double f = std::sqrt(1.0 - t * t);

  Matrix k_fail1(4), k_fail2(4);
  k_fail1(0, 0) = f;
  k_fail2(2, 2) = f;

  // Per block: P(+-45) * diag(t, 1) = [[t, +-1], [+-t, 1]] / 2.
  Matrix k_plus(4), k_minus(4);
  for (std::size_t off : {std::size_t{0}, std::size_t{2}}) {
    k_plus(off, off) = t / 2;
    k_plus(off, off + 1) = 0.5;
    k_plus(off + 1, off) = t / 2;
    k_plus(off + 1, off + 1) = 0.5;
    k_minus(off, off) = t / 2;
    k_minus(off, off + 1) = -0.5;
    k_minus(off + 1, off) = -t / 2;
    k_minus(off + 1, off + 1) = 0.5;
  }
  return KrausSet({{labels::kApd0, std::move(k_fail1)},
                   {labels::kApd0p, std::move(k_fail2)},
                   {labels::kApd1, std::move(k_plus)},
                   {labels::kApd2, std::move(k_minus)}});
}

/// Four-outcome unambiguous measurement on the two-path space.
inline Povm usd_povm(double alpha) { return usd_kraus(alpha).to_povm(); }

/// Conditional probability that the announced state was prepared, given the
/// outcome: eta_j Tr(rho_j Pi) / sum_i eta_i Tr(rho_i Pi).
inline double confidence_of(const Povm& povm, const std::string& outcome_label,
                            const DiscriminationProblem& problem) {
  const auto state = labels::announced_state(outcome_label);
  if (!state)
    throw validation_error("confidence_of: outcome " + outcome_label +
                           " announces no state");
  const Matrix& pi = povm.element(outcome_label);
  if (pi.dim() != problem.dim()) throw validation_error("confidence_of: dimension mismatch");
  const double j1 = problem.eta1 * (pi * problem.rho1.matrix()).trace().real();
  const double j2 = problem.eta2 * (pi * problem.rho2.matrix()).trace().real();
  const double total = j1 + j2;
  if (total <= 0.0)
    throw validation_error("confidence_of: outcome " + outcome_label +
                           " has zero probability; confidence undefined");
  return (*state == 0 ? j1 : j2) / total;
}

enum class Strategy { MinError, MaxConfidence, UnambiguousUsd };

inline std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::MinError: return "minerror";
    case Strategy::MaxConfidence: return "mc";
    case Strategy::UnambiguousUsd: return "usd";
  }
  return "?";
}

/// A strategy with its measurement and predicted figures of merit.
struct StrategyReport {
  Strategy strategy;
  Povm povm;
  std::map<std::string, double> predicted;
};

inline StrategyReport report_max_confidence(const PartialPolarizationParams& params) {
  const auto problem = DiscriminationProblem::equal_priors(
      make_partially_polarized(params, Sign::Plus),
      make_partially_polarized(params, Sign::Minus));
  StrategyReport r{Strategy::MaxConfidence, mc_povm(params.p, params.beta), {}};
  r.predicted["Q"] = mc_failure_prob(params.p, params.beta);
  r.predicted["C"] = max_confidence(params.p, params.beta);
  r.predicted["C_minerr"] = minerror_confidence(params.p, params.beta);
  r.predicted["P_E"] = helstrom_error(problem);
  return r;
}

inline StrategyReport report_usd(const MixedPairParams& params) {
  auto [rho1, rho2] = make_mixed_pair(params);
  const auto problem = DiscriminationProblem::equal_priors(rho1, rho2);
  StrategyReport r{Strategy::UnambiguousUsd, usd_povm(params.alpha), {}};
  r.predicted["Q"] = usd_failure_prob(params.alpha);
  r.predicted["P_E"] = helstrom_error(problem);
  return r;
}

inline StrategyReport report_min_error(const DiscriminationProblem& problem) {
  Povm povm = minerror_povm(problem);
  StrategyReport r{Strategy::MinError, povm, {}};
  r.predicted["P_E"] = helstrom_error(problem);
  r.predicted["C"] = confidence_of(povm, labels::kState1, problem);
  return r;
}

}  // namespace qsd
