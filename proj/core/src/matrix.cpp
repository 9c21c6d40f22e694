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

#include "braidgate/exactnum/matrix.hpp"

#include "text_util.hpp"

namespace braidgate::exactnum {

CycloMatrix cyclo_identity(std::size_t d, int order) {
  return CycloMatrix::identity(d, Cyclotomic::zero(order),
                               Cyclotomic::one(order));
}

CycloMatrix cyclo_zero(std::size_t rows, std::size_t cols, int order) {
  return CycloMatrix(rows, cols, Cyclotomic::zero(order));
}

int matrix_order(const CycloMatrix& a) {
  if (a.entries().empty()) return 1;
  const int order = a.entries().front().order();
  for (const auto& e : a.entries()) {
    if (e.order() != order) {
      throw DimensionError("matrix entries live in different fields");
    }
  }
  return order;
}

CycloMatrix embed(const CycloMatrix& a, int order) {
  CycloMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).embed(order);
  return out;
}

Cyclotomic frobenius_sq(const CycloMatrix& a) {
  Cyclotomic acc = Cyclotomic::zero(matrix_order(a));
  for (const auto& e : a.entries()) acc += e.conj() * e;
  return acc;
}

CycloMatrix inverse_2x2(const CycloMatrix& a) {
  const Cyclotomic det = det_2x2(a);
  if (det.is_zero()) {
    throw DomainError("inverse of a singular 2x2 matrix");
  }
  const Cyclotomic inv = det.inverse();
  CycloMatrix out = a;
  out(0, 0) = a(1, 1) * inv;
  out(1, 1) = a(0, 0) * inv;
  out(0, 1) = -a(0, 1) * inv;
  out(1, 0) = -a(1, 0) * inv;
  return out;
}

CycloMatrix inverse(const CycloMatrix& a) {
  a.require_square();
  const std::size_t n = a.rows();
  const int order = matrix_order(a);
  CycloMatrix left = a;
  CycloMatrix right = cyclo_identity(n, order);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && left(pivot, col).is_zero()) ++pivot;
    if (pivot == n) {
      throw DomainError("inverse of a singular matrix");
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(left(pivot, j), left(col, j));
        std::swap(right(pivot, j), right(col, j));
      }
    }
    const Cyclotomic scale = left(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      left(col, j) *= scale;
      right(col, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || left(i, col).is_zero()) continue;
      const Cyclotomic f = left(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        left(i, j) -= f * left(col, j);
        right(i, j) -= f * right(col, j);
      }
    }
  }
  return right;
}

std::size_t rank(const CycloMatrix& a) {
  CycloMatrix m = a;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
    const Cyclotomic inv = m(r, col).inverse();
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, col).is_zero()) continue;
      const Cyclotomic f = m(i, col) * inv;
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

bool is_identity(const CycloMatrix& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Cyclotomic& e = a(i, j);
      if (i == j) {
        if (!e.is_rational() || e.coeffs()[0] != Rational(1)) return false;
      } else if (!e.is_zero()) {
        return false;
      }
    }
  }
  return true;
}

ComplexMatrix to_complex(const CycloMatrix& a) {
  ComplexMatrix out(a.rows(), a.cols(), ExactComplex());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(i, j) = cyclo_to_complex(a(i, j));
  return out;
}

RegularReal frobenius_sq(const ComplexMatrix& a) {
  RegularReal acc;
  for (const auto& e : a.entries()) acc = acc + abs_sq(e);
  return acc;
}

std::string format_rows(const CycloMatrix& a) {
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += ';';
      out += a(i, j).coeffs_to_string();
    }
    out += '\n';
  }
  return out;
}

CycloMatrix parse_rows(int order, std::size_t rows, std::size_t cols,
                       const std::vector<std::string>& lines) {
  if (lines.size() != rows) {
    throw DomainError("expected " + std::to_string(rows) +
                      " matrix rows, got " + std::to_string(lines.size()));
  }
  CycloMatrix out = cyclo_zero(rows, cols, order);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto parts = detail::split(lines[i], ';');
    if (parts.size() == cols) {
      for (std::size_t j = 0; j < cols; ++j) {
        out(i, j) = Cyclotomic::parse_coeffs(order, parts[j]);
      }
    } else if (parts.size() == 2 * cols) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (detail::parse_int(parts[2 * j], "entry order") != order) {
          throw DomainError("entry order disagrees with the header in row " +
                            std::to_string(i + 1));
        }
        out(i, j) = Cyclotomic::parse_coeffs(order, parts[2 * j + 1]);
      }
    } else {
      throw DomainError("row " + std::to_string(i + 1) + " has " +
                        std::to_string(parts.size()) +
                        " fields; expected " + std::to_string(cols) +
                        " entries");
    }
  }
  return out;
}

}  // namespace braidgate::exactnum
