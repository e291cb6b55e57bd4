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

/// Single source of truth for every numerical tolerance in the library.
/// Property tests reference these constants instead of restating magic
/// numbers.
namespace qsd::tol {

/// Max |A - A^dagger| entry accepted when constructing Hermitian types.
inline constexpr double kHermitian = 1e-12;

/// |Tr(rho) - 1| accepted for density operators.
inline constexpr double kTrace = 1e-12;

/// |  ||v|| - 1 | accepted for pure states.
inline constexpr double kUnitNorm = 1e-12;

/// Max |U^dagger U - I| entry accepted for unitaries.
inline constexpr double kUnitary = 1e-12;

/// Eigenvalues as low as -kPsdSlack still count as positive semidefinite.
inline constexpr double kPsdSlack = 1e-10;

/// Max |sum - I| entry for POVM completeness and Kraus normalization.
inline constexpr double kCompleteness = 1e-10;

/// Residual ||A v - lambda v|| guaranteed by the eigensolver.
inline constexpr double kEigResidual = 1e-9;

/// Eigenvector orthonormality guaranteed by the eigensolver.
inline constexpr double kEigOrtho = 1e-10;

/// Probabilities in [-kProbClamp, 0) are treated as round-off and clamped
/// to zero; anything below -kProbClamp is a construction bug and throws.
inline constexpr double kProbClamp = 1e-10;

/// |sum of probabilities - 1| accepted for click distributions.
inline constexpr double kProbSum = 1e-10;

/// Undetected population a circuit may leave behind before propagate
/// reports an error.
inline constexpr double kLeftover = 1e-10;

/// Element-wise tolerance for circuit <-> POVM equivalence.
inline constexpr double kCircuitPovm = 1e-9;

/// Tolerance for Born-rule / closed-form cross checks.
inline constexpr double kBornEq = 1e-10;

}  // namespace qsd::tol
