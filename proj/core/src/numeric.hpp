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

#include <complex>
#include <utility>
#include <vector>

#include "braidgate/exactnum/cyclotomic.hpp"
#include "braidgate/exactnum/matrix.hpp"

namespace braidgate::compiler::detail {

using Complex = std::complex<double>;

/// Dense square matrix of doubles used to screen search candidates.
struct NumMatrix {
  std::size_t d = 0;
  std::vector<Complex> a;

  NumMatrix() = default;
  explicit NumMatrix(std::size_t dim) : d(dim), a(dim * dim) {}
  static NumMatrix identity(std::size_t dim) {
    NumMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  Complex& operator()(std::size_t i, std::size_t j) { return a[i * d + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return a[i * d + j];
  }
};

NumMatrix operator*(const NumMatrix& x, const NumMatrix& y);
NumMatrix adjoint(const NumMatrix& x);
NumMatrix scaled(const NumMatrix& x, Complex s);

Complex to_double(const exactnum::Cyclotomic& c);
NumMatrix to_numeric(const exactnum::CycloMatrix& m);
NumMatrix to_numeric(const exactnum::ComplexMatrix& m);

/// |tr(x^dagger y)|^2 / (||x||^2 ||y||^2).
double overlap(const NumMatrix& x, const NumMatrix& y);

/// Balanced group commutator of an SU(2) matrix delta: V, W rotations by
/// the same angle phi with V W V^dagger W^dagger = delta up to sign, where
/// sin(theta/2) = 2 sin^2(phi/2) sqrt(1 - sin^4(phi/2)) and theta is the
/// rotation angle of delta.
std::pair<NumMatrix, NumMatrix> group_commutator(const NumMatrix& delta);

}  // namespace braidgate::compiler::detail
