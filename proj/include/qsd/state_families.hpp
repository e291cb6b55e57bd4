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

#include <array>
#include <cmath>
#include <numbers>

#include "qsd/measurement.hpp"
#include "qsd/quantum.hpp"

// State families under study. Two-dimensional states live in the linear
// polarization basis (H, V). Four-dimensional states live on two spatial
// paths with the fixed basis order (H1, V1, H2, V2): path-major,
// polarization-minor. Angles are radians everywhere; degrees exist only at
// the CLI boundary.
namespace qsd {

enum class Sign { Plus, Minus };

inline double sign_factor(Sign s) { return s == Sign::Plus ? 1.0 : -1.0; }

/// Degree of polarization p in (0,1] and half separation angle beta in
/// [0, pi/4].
struct PartialPolarizationParams {
  double p;
  double beta;

  PartialPolarizationParams(double degree, double half_angle) : p(degree), beta(half_angle) {
    if (!(p > 0.0) || p > 1.0)
      throw validation_error("PartialPolarizationParams: p must be in (0, 1]");
    if (!(beta >= 0.0) || beta > std::numbers::pi / 4 + 1e-12)
      throw validation_error("PartialPolarizationParams: beta must be in [0, pi/4]");
  }
};

/// Parameters of the rank-<=2 two-path state: populations r11 + r22 = 1 and
/// the cross-path coherence r12 between H on path 1 and V on path 2.
struct Rho0Params {
  double r11;
  double r22;
  Complex r12;

  Rho0Params(double pop1, double pop2, Complex coherence)
      : r11(pop1), r22(pop2), r12(coherence) {
    if (!(r11 >= 0.0) || !(r22 >= 0.0))
      throw validation_error("Rho0Params: populations must be nonnegative");
    if (std::abs(r11 + r22 - 1.0) > tol::kTrace)
      throw validation_error("Rho0Params: r11 + r22 must equal 1");
    if (std::norm(r12) > r11 * r22 + 1e-12)
      throw validation_error("Rho0Params: |r12|^2 exceeds r11*r22 (not positive semidefinite)");
  }
};

/// Half separation angle alpha in [0, pi/4] plus the seed state it rotates.
struct MixedPairParams {
  double alpha;
  Rho0Params rho0;

  MixedPairParams(double half_angle, Rho0Params seed) : alpha(half_angle), rho0(seed) {
    if (!(alpha >= 0.0) || alpha > std::numbers::pi / 4 + 1e-12)
      throw validation_error("MixedPairParams: alpha must be in [0, pi/4]");
  }
};

/// rho_pm = p |psi_pm><psi_pm| + (1-p) I/2 with
/// |psi_pm> = cos(beta)|H> +- sin(beta)|V>.
inline DensityOperator make_partially_polarized(const PartialPolarizationParams& params, Sign sign) {
  const double cb = std::cos(params.beta);
  const double sb = sign_factor(sign) * std::sin(params.beta);
  const PureState psi({Complex{cb, 0.0}, Complex{sb, 0.0}});
  Matrix m = psi.projector() * Complex{params.p, 0.0};
  m += Matrix::identity(2) * Complex{(1.0 - params.p) / 2.0, 0.0};
  return DensityOperator(std::move(m));
}

/// The two-path seed state: nonzero entries only at (H1,H1) = r11,
/// (V2,V2) = r22 and the (H1,V2) coherence r12.
inline DensityOperator make_rho0(const Rho0Params& params) {
  Matrix m(4);
  m(0, 0) = params.r11;
  m(3, 3) = params.r22;
  m(0, 3) = params.r12;
  m(3, 0) = std::conj(params.r12);
  return DensityOperator(std::move(m));
}

/// Seed-state parameters produced by routing a partially polarized beam
/// p |psi_gamma><psi_gamma| + (1-p) I/2 (with |psi_gamma> at angle gamma
/// from H) through a polarizing beam splitter: H to path 1, V to path 2,
/// lossless.
inline Rho0Params rho0_from_input_polarization(double p, double gamma) {
  if (!(p > 0.0) || p > 1.0)
    throw validation_error("rho0_from_input_polarization: p must be in (0, 1]");
  const double cg = std::cos(gamma), sg = std::sin(gamma);
  return Rho0Params(p * cg * cg + (1.0 - p) / 2.0, p * sg * sg + (1.0 - p) / 2.0,
                    Complex{p * cg * sg, 0.0});
}

namespace detail {
// Proper rotation by theta embedded on one 2-dim block of the 4-dim space.
inline void put_rotation_block(Matrix& m, std::size_t offset, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  m(offset, offset) = c;
  m(offset, offset + 1) = -s;
  m(offset + 1, offset) = s;
  m(offset + 1, offset + 1) = c;
}
}  // namespace detail

/// The pair-generating unitary: block-diagonal on span{H1,V1} and
/// span{H2,V2}. Maps |H1> to cos(a)|H1> +- sin(a)|V1> and |V2> to
/// cos(a)|H2> +- sin(a)|V2>; each block is completed as the proper rotation
/// (determinant +1) consistent with those images, i.e. R(+-a) on block 1 and
/// R(+-a - pi/2) on block 2.
inline UnitaryOperator make_u_pm(double alpha, Sign sign) {
  if (!(alpha >= 0.0) || alpha > std::numbers::pi / 4 + 1e-12)
    throw validation_error("make_u_pm: alpha must be in [0, pi/4]");
  const double sgn = sign_factor(sign);
  Matrix m(4);
  detail::put_rotation_block(m, 0, sgn * alpha);
  detail::put_rotation_block(m, 2, sgn * alpha - std::numbers::pi / 2);
  return UnitaryOperator(std::move(m));
}

/// (rho1, rho2) = (U+ rho0 U+^dagger, U- rho0 U-^dagger).
inline std::pair<DensityOperator, DensityOperator> make_mixed_pair(const MixedPairParams& params) {
  const DensityOperator rho0 = make_rho0(params.rho0);
  return {make_u_pm(params.alpha, Sign::Plus).conjugate(rho0),
          make_u_pm(params.alpha, Sign::Minus).conjugate(rho0)};
}

/// (x, y, z) with rho = (I + x sx + y sy + z sz)/2; z = +1 for |H><H|.
inline std::array<double, 3> bloch_vector(const DensityOperator& rho) {
  if (rho.dim() != 2) throw validation_error("bloch_vector: dimension must be 2");
  const Matrix& m = rho.matrix();
  return {2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(), (m(0, 0) - m(1, 1)).real()};
}

}  // namespace qsd
