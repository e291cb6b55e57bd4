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
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qsd {

using Complex = std::complex<double>;

/// Thrown whenever a domain invariant fails at construction or use.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Dense square complex matrix, row-major. The quantum domain types restrict
/// themselves to dimensions 2 and 4; the optical propagation workspace uses
/// the same class for its path-times-polarization mode register (up to 12
/// modes here), so the dimension is a runtime value.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), a_(dim * dim, Complex{}) {
    if (dim == 0 || dim > kMaxDim) {
      throw validation_error("Matrix dimension " + std::to_string(dim) + " out of range");
    }
  }

  /// Builds from nested braces; every row must have length dim.
  Matrix(std::initializer_list<std::initializer_list<Complex>> rows)
      : Matrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != dim_) throw validation_error("Matrix row length mismatch");
      std::size_t j = 0;
      for (const Complex& v : row) (*this)(i, j++) = v;
      ++i;
    }
  }

  static Matrix identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix zero(std::size_t dim) { return Matrix(dim); }

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  Matrix& operator+=(const Matrix& rhs) {
    require_same_dim(rhs);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& rhs) {
    require_same_dim(rhs);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
    return *this;
  }
  Matrix& operator*=(Complex s) {
    for (Complex& v : a_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(Matrix lhs, Complex s) { return lhs *= s; }
  friend Matrix operator*(Complex s, Matrix rhs) { return rhs *= s; }

  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    lhs.require_same_dim(rhs);
    const std::size_t n = lhs.dim_;
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const Complex lik = lhs(i, k);
        if (lik == Complex{}) continue;
        for (std::size_t j = 0; j < n; ++j) out(i, j) += lik * rhs(k, j);
      }
    }
    return out;
  }

  Matrix adjoint() const {
    Matrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
  }

  Complex trace() const {
    Complex t{};
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const Complex& v : a_) m = std::max(m, std::abs(v));
    return m;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const Complex& v : a_) s += std::norm(v);
    return std::sqrt(s);
  }

  /// Max entry of |A - A^dagger|; zero for exactly Hermitian matrices.
  double hermiticity_defect() const {
    double m = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j)
        m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
  }

  bool all_finite() const {
    for (const Complex& v : a_)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
  }

  static constexpr std::size_t kMaxDim = 32;

 private:
  void require_same_dim(const Matrix& other) const {
    if (dim_ != other.dim_) throw validation_error("Matrix dimension mismatch");
  }

  std::size_t dim_ = 0;
  std::vector<Complex> a_;
};

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw validation_error("Matrix dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

/// 0.5 * (A + A^dagger); removes round-off asymmetry before decompositions.
inline Matrix hermitized(const Matrix& a) {
  Matrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      out(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return out;
}

/// Outer product v w^dagger.
inline Matrix outer(const std::vector<Complex>& v, const std::vector<Complex>& w) {
  if (v.size() != w.size()) throw validation_error("outer: length mismatch");
  Matrix out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) out(i, j) = v[i] * std::conj(w[j]);
  return out;
}

inline std::vector<Complex> apply(const Matrix& m, const std::vector<Complex>& v) {
  if (m.dim() != v.size()) throw validation_error("apply: dimension mismatch");
  std::vector<Complex> out(v.size(), Complex{});
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

}  // namespace qsd
