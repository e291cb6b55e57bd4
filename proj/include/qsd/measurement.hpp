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

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsd/quantum.hpp"

namespace qsd {

/// Canonical outcome labels. Abstract measurements use the strategy labels;
/// simulated networks use the detector labels.
namespace labels {
inline const std::string kInconclusive = "Inconclusive";
inline const std::string kState1 = "State1";
inline const std::string kState2 = "State2";
inline const std::string kApd0 = "APD0";
inline const std::string kApd0p = "APD0'";
inline const std::string kApd1 = "APD1";
inline const std::string kApd2 = "APD2";

/// Loss sinks absorb light that a real bench would simply never detect
/// (dark ports of recombination beam splitters under imperfect waveplates).
inline const std::string kLossPrefix = "Lost:";

inline bool is_loss(const std::string& label) {
  return label.rfind(kLossPrefix, 0) == 0;
}

/// Index (0 or 1) of the state a conclusive outcome announces, if any.
inline std::optional<int> announced_state(const std::string& label) {
  if (label == kState1 || label == kApd1) return 0;
  if (label == kState2 || label == kApd2) return 1;
  return std::nullopt;
}
}  // namespace labels

/// One labeled measurement operator.
struct Outcome {
  std::string label;
  Matrix element;
};

/// Probability per outcome label, in a fixed order. Values are exact
/// probabilities: clamped at zero and summing to one.
class ClickDistribution {
 public:
  ClickDistribution() = default;
  explicit ClickDistribution(std::vector<std::pair<std::string, double>> probs)
      : p_(std::move(probs)) {
    double sum = 0.0;
    for (auto& [label, prob] : p_) {
      if (prob < 0.0 || prob > 1.0 + tol::kProbSum)
        throw validation_error("ClickDistribution: probability out of range for " + label);
      sum += prob;
    }
    if (std::abs(sum - 1.0) > tol::kProbSum)
      throw validation_error("ClickDistribution: probabilities sum to " + std::to_string(sum));
  }

  std::size_t size() const { return p_.size(); }
  const std::pair<std::string, double>& at(std::size_t i) const { return p_[i]; }
  auto begin() const { return p_.begin(); }
  auto end() const { return p_.end(); }

  double prob(const std::string& label) const {
    for (const auto& [l, p] : p_)
      if (l == label) return p;
    throw validation_error("ClickDistribution: unknown label " + label);
  }

  bool has(const std::string& label) const {
    return std::any_of(p_.begin(), p_.end(), [&](const auto& lp) { return lp.first == label; });
  }

 private:
  std::vector<std::pair<std::string, double>> p_;
};

namespace detail {
inline double clamp_probability(double p, const std::string& context) {
  if (p < -tol::kProbClamp)
    throw validation_error(context + ": probability " + std::to_string(p) +
                           " below -" + std::to_string(tol::kProbClamp) +
                           " (invalid measurement, not round-off)");
  return std::min(std::max(p, 0.0), 1.0);
}
}  // namespace detail

/// Positive operator-valued measure: labeled PSD elements summing to the
/// identity. Validated on construction.
class Povm {
 public:
  struct unchecked_t {};
  static constexpr unchecked_t unchecked{};

  explicit Povm(std::vector<Outcome> outcomes) : Povm(unchecked, std::move(outcomes)) {
    validate();
  }

  /// Skips validation; for internal assembly and tests of downstream error
  /// paths. Everything user-facing goes through the checked constructor.
  Povm(unchecked_t, std::vector<Outcome> outcomes) : outcomes_(std::move(outcomes)) {
    if (outcomes_.empty()) throw validation_error("Povm: no outcomes");
    dim_ = outcomes_.front().element.dim();
  }

  void validate() const {
    detail::require_state_dim(dim_, "Povm");
    Matrix sum(dim_);
    for (const Outcome& o : outcomes_) {
      if (o.label.empty()) throw validation_error("Povm: empty label");
      if (o.element.dim() != dim_) throw validation_error("Povm: mixed dimensions");
      if (o.element.hermiticity_defect() > tol::kHermitian)
        throw validation_error("Povm: element " + o.label + " not Hermitian");
      if (min_eigenvalue(o.element) < -tol::kPsdSlack)
        throw validation_error("Povm: element " + o.label + " not positive semidefinite");
      sum += o.element;
    }
    for (std::size_t i = 0; i < outcomes_.size(); ++i)
      for (std::size_t j = i + 1; j < outcomes_.size(); ++j)
        if (outcomes_[i].label == outcomes_[j].label)
          throw validation_error("Povm: duplicate label " + outcomes_[i].label);
    const double defect = max_abs_diff(sum, Matrix::identity(dim_));
    if (defect > tol::kCompleteness)
      throw validation_error("Povm: completeness defect " + std::to_string(defect));
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return outcomes_.size(); }
  const Outcome& outcome(std::size_t i) const { return outcomes_[i]; }
  auto begin() const { return outcomes_.begin(); }
  auto end() const { return outcomes_.end(); }

  const Matrix& element(const std::string& label) const {
    for (const Outcome& o : outcomes_)
      if (o.label == label) return o.element;
    throw validation_error("Povm: unknown label " + label);
  }

  bool has(const std::string& label) const {
    return std::any_of(outcomes_.begin(), outcomes_.end(),
                       [&](const Outcome& o) { return o.label == label; });
  }

 private:
  std::vector<Outcome> outcomes_;
  std::size_t dim_ = 0;
};

/// Labeled Kraus operators with sum K^dagger K = I. The POVM element of a
/// branch is K^dagger K.
class KrausSet {
 public:
  explicit KrausSet(std::vector<Outcome> operators) : ops_(std::move(operators)) {
    if (ops_.empty()) throw validation_error("KrausSet: no operators");
    dim_ = ops_.front().element.dim();
    detail::require_state_dim(dim_, "KrausSet");
    Matrix sum(dim_);
    for (const Outcome& o : ops_) {
      if (o.element.dim() != dim_) throw validation_error("KrausSet: mixed dimensions");
      sum += o.element.adjoint() * o.element;
    }
    const double defect = max_abs_diff(sum, Matrix::identity(dim_));
    if (defect > tol::kCompleteness)
      throw validation_error("KrausSet: normalization defect " + std::to_string(defect));
  }

  Povm to_povm() const {
    std::vector<Outcome> outs;
    outs.reserve(ops_.size());
    for (const Outcome& o : ops_)
      outs.push_back({o.label, hermitized(o.element.adjoint() * o.element)});
    return Povm(std::move(outs));
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return ops_.size(); }
  const Outcome& op(std::size_t i) const { return ops_[i]; }

 private:
  std::vector<Outcome> ops_;
  std::size_t dim_ = 0;
};

/// Born rule: p_j = Tr(rho Pi_j), clamped against round-off, summing to 1.
inline ClickDistribution born_probabilities(const Povm& povm, const DensityOperator& rho) {
  if (povm.dim() != rho.dim())
    throw validation_error("born_probabilities: dimension mismatch");
  std::vector<std::pair<std::string, double>> probs;
  probs.reserve(povm.size());
  for (const Outcome& o : povm) {
    const double p = (o.element * rho.matrix()).trace().real();
    probs.emplace_back(o.label, detail::clamp_probability(p, "born_probabilities[" + o.label + "]"));
  }
  return ClickDistribution(std::move(probs));
}

}  // namespace qsd
