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
#include <numeric>
#include <vector>

#include "qsd/matrix.hpp"
#include "qsd/tolerances.hpp"

namespace qsd {

/// Eigenvalues sorted descending; `vectors` holds the matching orthonormal
/// eigenvectors as columns.
struct EigenSystem {
  std::vector<double> values;
  Matrix vectors;

  std::vector<Complex> eigenvector(std::size_t k) const {
    std::vector<Complex> v(vectors.dim());
    for (std::size_t i = 0; i < vectors.dim(); ++i) v[i] = vectors(i, k);
    return v;
  }
};

namespace detail {

// One cyclic complex-Jacobi rotation zeroing B[p][q]. The unitary is
// J = I except J[pp]=c, J[pq]=-s*e^{i phi}, J[qp]=s*e^{-i phi}, J[qq]=c
// with e^{i phi} the phase of B[p][q].
inline void jacobi_rotate(Matrix& b, Matrix& v, std::size_t p, std::size_t q) {
  const Complex bpq = b(p, q);
  const double abs_bpq = std::abs(bpq);
  if (abs_bpq == 0.0) return;
  const Complex phase = bpq / abs_bpq;
  const double app = b(p, p).real();
  const double aqq = b(q, q).real();
  const double tau = (aqq - app) / (2.0 * abs_bpq);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex jpq = -s * phase;            // J[p][q]
  const Complex jqp = s * std::conj(phase);  // J[q][p]

  const std::size_t n = b.dim();
  // B <- B J
  for (std::size_t k = 0; k < n; ++k) {
    const Complex bkp = b(k, p), bkq = b(k, q);
    b(k, p) = bkp * c + bkq * jqp;
    b(k, q) = bkp * jpq + bkq * c;
  }
  // B <- J^dagger B
  for (std::size_t k = 0; k < n; ++k) {
    const Complex bpk = b(p, k), bqk = b(q, k);
    b(p, k) = c * bpk + std::conj(jqp) * bqk;
    b(q, k) = std::conj(jpq) * bpk + c * bqk;
  }
  // V <- V J
  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * c + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * c;
  }
}

inline double offdiag_norm(const Matrix& b) {
  double s = 0.0;
  for (std::size_t p = 0; p < b.dim(); ++p)
    for (std::size_t q = p + 1; q < b.dim(); ++q) s += std::norm(b(p, q));
  return std::sqrt(2.0 * s);
}

}  // namespace detail

/// Diagonalizes a Hermitian matrix by cyclic complex Jacobi sweeps. Rejects
/// non-Hermitian input, naming the offending asymmetry.
inline EigenSystem eig_hermitian(const Matrix& a) {
  const double defect = a.hermiticity_defect();
  if (defect > tol::kHermitian) {
    throw validation_error("eig_hermitian: input is not Hermitian (max |A - A^dagger| entry = " +
                           std::to_string(defect) + ")");
  }
  if (!a.all_finite()) throw validation_error("eig_hermitian: non-finite entries");

  const std::size_t n = a.dim();
  Matrix b = hermitized(a);
  Matrix v = Matrix::identity(n);

  const double scale = std::max(b.frobenius_norm(), 1e-300);
  for (int sweep = 0; sweep < 60; ++sweep) {
    if (detail::offdiag_norm(b) <= 1e-15 * scale) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) detail::jacobi_rotate(b, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = b(i, i).real();
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) { return diag[l] > diag[r]; });

  EigenSystem out;
  out.values.resize(n);
  out.vectors = Matrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = diag[order[k]];
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

/// Sum of |eigenvalue| of a Hermitian matrix.
inline double trace_norm(const Matrix& a) {
  const EigenSystem es = eig_hermitian(a);
  double s = 0.0;
  for (double lambda : es.values) s += std::abs(lambda);
  return s;
}

inline double min_eigenvalue(const Matrix& a) {
  const EigenSystem es = eig_hermitian(a);
  return es.values.back();
}

}  // namespace qsd
