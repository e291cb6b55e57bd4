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
#include <string>
#include <utility>
#include <vector>

#include "qsd/eig.hpp"
#include "qsd/matrix.hpp"
#include "qsd/tolerances.hpp"

namespace qsd {

namespace detail {
inline void require_state_dim(std::size_t dim, const char* who) {
  if (dim != 2 && dim != 4) {
    throw validation_error(std::string(who) + ": dimension must be 2 or 4, got " +
                           std::to_string(dim));
  }
}
}  // namespace detail

/// Unit-norm complex amplitude vector over dimension 2 or 4. Immutable after
/// validation.
class PureState {
 public:
  explicit PureState(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
    detail::require_state_dim(amps_.size(), "PureState");
    double n2 = 0.0;
    for (const Complex& a : amps_) {
      if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
        throw validation_error("PureState: non-finite amplitude");
      n2 += std::norm(a);
    }
    if (std::abs(std::sqrt(n2) - 1.0) > tol::kUnitNorm)
      throw validation_error("PureState: norm deviates from 1 by " +
                             std::to_string(std::abs(std::sqrt(n2) - 1.0)));
  }

  std::size_t dim() const { return amps_.size(); }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  Complex amplitude(std::size_t i) const { return amps_[i]; }

  Matrix projector() const { return outer(amps_, amps_); }

 private:
  std::vector<Complex> amps_;
};

/// Inner product <psi1|psi2> (first argument conjugated).
inline Complex overlap(const PureState& psi1, const PureState& psi2) {
  if (psi1.dim() != psi2.dim()) throw validation_error("overlap: dimension mismatch");
  Complex s{};
  for (std::size_t i = 0; i < psi1.dim(); ++i)
    s += std::conj(psi1.amplitude(i)) * psi2.amplitude(i);
  return s;
}

/// Trace-one positive-semidefinite Hermitian operator; dimension 2 or 4.
class DensityOperator {
 public:
  explicit DensityOperator(Matrix m) : m_(std::move(m)) {
    detail::require_state_dim(m_.dim(), "DensityOperator");
    if (!m_.all_finite()) throw validation_error("DensityOperator: non-finite entries");
    const double defect = m_.hermiticity_defect();
    if (defect > tol::kHermitian)
      throw validation_error("DensityOperator: not Hermitian (defect " + std::to_string(defect) + ")");
    const double tr_err = std::abs(m_.trace() - Complex{1.0, 0.0});
    if (tr_err > tol::kTrace)
      throw validation_error("DensityOperator: trace deviates from 1 by " + std::to_string(tr_err));
    const double min_eig = min_eigenvalue(m_);
    if (min_eig < -tol::kPsdSlack)
      throw validation_error("DensityOperator: negative eigenvalue " + std::to_string(min_eig));
  }

  static DensityOperator pure(const PureState& psi) { return DensityOperator(psi.projector()); }

  static DensityOperator maximally_mixed(std::size_t dim) {
    detail::require_state_dim(dim, "DensityOperator");
    return DensityOperator(Matrix::identity(dim) * Complex{1.0 / static_cast<double>(dim), 0.0});
  }

  std::size_t dim() const { return m_.dim(); }
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

/// Operator with U^dagger U = I; dimension 2 or 4.
class UnitaryOperator {
 public:
  explicit UnitaryOperator(Matrix m) : m_(std::move(m)) {
    detail::require_state_dim(m_.dim(), "UnitaryOperator");
    if (!m_.all_finite()) throw validation_error("UnitaryOperator: non-finite entries");
    const double defect = max_abs_diff(m_.adjoint() * m_, Matrix::identity(m_.dim()));
    if (defect > tol::kUnitary)
      throw validation_error("UnitaryOperator: U^dagger U deviates from I by " +
                             std::to_string(defect));
  }

  std::size_t dim() const { return m_.dim(); }
  const Matrix& matrix() const { return m_; }

  /// U rho U^dagger.
  DensityOperator conjugate(const DensityOperator& rho) const {
    return DensityOperator(hermitized(m_ * rho.matrix() * m_.adjoint()));
  }

 private:
  Matrix m_;
};

/// Two candidate states with their prior probabilities.
struct DiscriminationProblem {
  double eta1;
  double eta2;
  DensityOperator rho1;
  DensityOperator rho2;

  DiscriminationProblem(double prior1, double prior2, DensityOperator state1,
                        DensityOperator state2)
      : eta1(prior1), eta2(prior2), rho1(std::move(state1)), rho2(std::move(state2)) {
    if (!(eta1 >= 0.0) || !(eta2 >= 0.0) || std::abs(eta1 + eta2 - 1.0) > tol::kTrace)
      throw validation_error("DiscriminationProblem: priors must be nonnegative and sum to 1");
    if (rho1.dim() != rho2.dim())
      throw validation_error("DiscriminationProblem: state dimensions differ");
  }

  static DiscriminationProblem equal_priors(DensityOperator state1, DensityOperator state2) {
    return DiscriminationProblem(0.5, 0.5, std::move(state1), std::move(state2));
  }

  std::size_t dim() const { return rho1.dim(); }
};

}  // namespace qsd
