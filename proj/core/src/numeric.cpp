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

#include "numeric.hpp"

#include <cmath>
#include <numbers>

namespace braidgate::compiler::detail {

NumMatrix operator*(const NumMatrix& x, const NumMatrix& y) {
  NumMatrix out(x.d);
  for (std::size_t i = 0; i < x.d; ++i) {
    for (std::size_t k = 0; k < x.d; ++k) {
      const Complex xik = x(i, k);
      for (std::size_t j = 0; j < x.d; ++j) out(i, j) += xik * y(k, j);
    }
  }
  return out;
}

NumMatrix adjoint(const NumMatrix& x) {
  NumMatrix out(x.d);
  for (std::size_t i = 0; i < x.d; ++i)
    for (std::size_t j = 0; j < x.d; ++j) out(j, i) = std::conj(x(i, j));
  return out;
}

NumMatrix scaled(const NumMatrix& x, Complex s) {
  NumMatrix out = x;
  for (auto& e : out.a) e *= s;
  return out;
}

Complex to_double(const exactnum::Cyclotomic& c) {
  Complex sum = 0.0;
  const double step = 2.0 * std::numbers::pi / c.order();
  for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
    if (c.coeffs()[k].is_zero()) continue;
    sum += c.coeffs()[k].to_double() *
           std::polar(1.0, step * static_cast<double>(k));
  }
  return sum;
}

NumMatrix to_numeric(const exactnum::CycloMatrix& m) {
  NumMatrix out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_double(m(i, j));
  return out;
}

NumMatrix to_numeric(const exactnum::ComplexMatrix& m) {
  const exactnum::Rational eps(exactnum::Integer(1),
                               exactnum::Integer(1) << 64);
  NumMatrix out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(i, j) = {exactnum::real_approx(m(i, j).re, eps).to_double(),
                   exactnum::real_approx(m(i, j).im, eps).to_double()};
    }
  }
  return out;
}

double overlap(const NumMatrix& x, const NumMatrix& y) {
  Complex t = 0.0;
  double fx = 0.0;
  double fy = 0.0;
  for (std::size_t k = 0; k < x.a.size(); ++k) {
    t += std::conj(x.a[k]) * y.a[k];
    fx += std::norm(x.a[k]);
    fy += std::norm(y.a[k]);
  }
  return std::norm(t) / (fx * fy);
}

}  // namespace braidgate::compiler::detail
