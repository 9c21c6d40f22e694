// Copyright 2026 The braidgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "braidgate/errors.hpp"
#include "braidgate/exactnum/complex.hpp"
#include "braidgate/exactnum/cyclotomic.hpp"

namespace braidgate::exactnum {

/// Dense row-major matrix over an exact scalar type (Cyclotomic or
/// ExactComplex). Every size-dependent operation checks its operands.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

  static Matrix identity(std::size_t d, const T& zero, const T& one) {
    Matrix m(d, d, zero);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const T& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  const std::vector<T>& entries() const { return entries_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw DimensionError("matrix product of " + a.shape() + " and " +
                           b.shape());
    }
    Matrix out;
    out.rows_ = a.rows_;
    out.cols_ = b.cols_;
    out.entries_.reserve(a.rows_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < b.cols_; ++j) {
        T acc = a(i, 0) * b(0, j);
        for (std::size_t k = 1; k < a.cols_; ++k) {
          acc = acc + a(i, k) * b(k, j);
        }
        out.entries_.push_back(std::move(acc));
      }
    }
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) {
      out.entries_[i] = out.entries_[i] + b.entries_[i];
    }
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) {
      out.entries_[i] = out.entries_[i] - b.entries_[i];
    }
    return out;
  }

  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix out = a;
    for (auto& e : out.entries_) e = s * e;
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }

  std::string shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

  void require_same_shape(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
      throw DimensionError("matrix shape mismatch: " + shape() + " vs " +
                           other.shape());
    }
  }

  void require_square() const {
    if (!is_square() || rows_ == 0) {
      throw DimensionError("expected a nonempty square matrix, got " +
                           shape());
    }
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

using CycloMatrix = Matrix<Cyclotomic>;
using ComplexMatrix = Matrix<ExactComplex>;

template <typename T>
Matrix<T> transpose(const Matrix<T>& a) {
  if (a.rows() == 0 || a.cols() == 0) return a;
  Matrix<T> out(a.cols(), a.rows(), a(0, 0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

/// Conjugate transpose.
template <typename T>
Matrix<T> adjoint(const Matrix<T>& a) {
  if (a.rows() == 0 || a.cols() == 0) return a;
  Matrix<T> out(a.cols(), a.rows(), a(0, 0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = conj(a(i, j));
  return out;
}

template <typename T>
T trace(const Matrix<T>& a) {
  a.require_square();
  T acc = a(0, 0);
  for (std::size_t i = 1; i < a.rows(); ++i) acc = acc + a(i, i);
  return acc;
}

template <typename T>
T det_2x2(const Matrix<T>& a) {
  if (a.rows() != 2 || a.cols() != 2) {
    throw DimensionError("det_2x2 of " + a.shape());
  }
  return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
}

// Cyclotomic-specific helpers.

CycloMatrix cyclo_identity(std::size_t d, int order);
CycloMatrix cyclo_zero(std::size_t rows, std::size_t cols, int order);
/// Common order of all entries; throws DimensionError if they disagree.
int matrix_order(const CycloMatrix& a);
CycloMatrix embed(const CycloMatrix& a, int order);
/// sum |a_ij|^2, a real element of the field.
Cyclotomic frobenius_sq(const CycloMatrix& a);
CycloMatrix inverse_2x2(const CycloMatrix& a);
/// Gauss-Jordan inverse; throws DomainError when singular.
CycloMatrix inverse(const CycloMatrix& a);
std::size_t rank(const CycloMatrix& a);
bool is_identity(const CycloMatrix& a);
ComplexMatrix to_complex(const CycloMatrix& a);

RegularReal frobenius_sq(const ComplexMatrix& a);

/// One line per row; entries separated by ';', each entry written as its
/// bare coefficient list "c0,c1,...". The field order is left to a header.
std::string format_rows(const CycloMatrix& a);

/// Inverse of format_rows. Entries may also be written in the full
/// "L;c0,c1,..." form, in which case L must equal `order`.
CycloMatrix parse_rows(int order, std::size_t rows, std::size_t cols,
                       const std::vector<std::string>& lines);

}  // namespace braidgate::exactnum
