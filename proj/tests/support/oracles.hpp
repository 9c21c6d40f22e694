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

// Reference implementations used only by tests. None of them share code
// paths with the library routines they check.

#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <cstddef>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidgate/braid.hpp"
#include "braidgate/compiler.hpp"
#include "braidgate/exactnum.hpp"

namespace braidgate::testing {

using Big = boost::multiprecision::cpp_dec_float_50;

inline Big to_big(const exactnum::Rational& q) {
  return Big(q.numerator().get_str()) / Big(q.denominator().get_str());
}

// Machin: pi = 16 atan(1/5) - 4 atan(1/239).
inline Big machin_pi() {
  const auto atan_inv = [](int x) {
    const Big inv = Big(1) / Big(x);
    const Big inv_sq = inv * inv;
    const Big cutoff("1e-60");
    Big power = inv;
    Big sum = 0;
    for (int k = 0;; ++k) {
      const Big term = power / Big(2 * k + 1);
      sum += (k % 2 == 0) ? term : Big(-term);
      if (term < cutoff) break;
      power *= inv_sq;
    }
    return sum;
  };
  return 16 * atan_inv(5) - 4 * atan_inv(239);
}

struct BigComplex {
  Big re = 0;
  Big im = 0;
};

inline BigComplex operator+(const BigComplex& a, const BigComplex& b) {
  return {a.re + b.re, a.im + b.im};
}
inline BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline BigComplex conj(const BigComplex& a) { return {a.re, -a.im}; }
inline Big abs_sq(const BigComplex& a) { return a.re * a.re + a.im * a.im; }

// Evaluates sum_k c_k zeta^k with zeta = exp(2 pi i / L).
inline BigComplex to_big(const exactnum::Cyclotomic& a) {
  static const Big pi = machin_pi();
  BigComplex out;
  const auto& coeffs = a.coeffs();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Big angle = 2 * pi * Big(static_cast<long>(k)) / Big(a.order());
    const Big c = to_big(coeffs[k]);
    out.re += c * cos(angle);
    out.im += c * sin(angle);
  }
  return out;
}

using BigMatrix = std::vector<std::vector<BigComplex>>;

inline BigMatrix to_big(const exactnum::CycloMatrix& m) {
  BigMatrix out(m.rows(), std::vector<BigComplex>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = to_big(m(r, c));
  return out;
}

// Complex targets built from rational parts carry their exact values.
inline BigMatrix to_big(const compiler::CompileTarget& t) {
  if (t.is_cyclotomic()) return to_big(t.cyclotomic());
  const auto& m = t.complex();
  BigMatrix out(m.rows(), std::vector<BigComplex>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& re = m(r, c).re.exact_value();
      const auto& im = m(r, c).im.exact_value();
      if (!re || !im) {
        throw std::logic_error("oracle needs rational target entries");
      }
      out[r][c] = {to_big(*re), to_big(*im)};
    }
  }
  return out;
}

// sqrt(1 - |tr(U^dag V)| / (|U|_F |V|_F)), the phase-invariant distance.
inline Big big_distance(const BigMatrix& u, const BigMatrix& v) {
  BigComplex tr;
  Big fu = 0;
  Big fv = 0;
  for (std::size_t r = 0; r < u.size(); ++r) {
    for (std::size_t c = 0; c < u[r].size(); ++c) {
      tr = tr + conj(u[r][c]) * v[r][c];
      fu += abs_sq(u[r][c]);
      fv += abs_sq(v[r][c]);
    }
  }
  Big x = 1 - sqrt(abs_sq(tr) / (fu * fv));
  if (x < 0) x = 0;
  return sqrt(x);
}

// Unreduced Burau matrix of a single Artin letter, written out directly.
inline exactnum::CycloMatrix burau_letter(int strands, int letter,
                                          const exactnum::Cyclotomic& t) {
  const int order = t.order();
  const auto n = static_cast<std::size_t>(strands);
  exactnum::CycloMatrix m = exactnum::cyclo_identity(n, order);
  const auto i = static_cast<std::size_t>(std::abs(letter) - 1);
  const auto one = exactnum::Cyclotomic::one(order);
  const auto zero = exactnum::Cyclotomic::zero(order);
  if (letter > 0) {
    m(i, i) = one - t;
    m(i, i + 1) = t;
    m(i + 1, i) = one;
    m(i + 1, i + 1) = zero;
  } else {
    const auto t_inv = t.inverse();
    m(i, i) = zero;
    m(i, i + 1) = one;
    m(i + 1, i) = t_inv;
    m(i + 1, i + 1) = one - t_inv;
  }
  return m;
}

inline exactnum::CycloMatrix burau_product(const braid::BraidWord& w,
                                           const exactnum::Cyclotomic& t) {
  exactnum::CycloMatrix m = exactnum::cyclo_identity(
      static_cast<std::size_t>(w.strands()), t.order());
  for (int letter : w.letters()) m = m * burau_letter(w.strands(), letter, t);
  return m;
}

struct NaiveResult {
  std::vector<std::string> word;
  exactnum::Cyclotomic overlap;
};

// Exhaustive search over every word of length <= max_len, with no pruning.
// Maximizes |tr(U^dag T)|^2 / (|U|^2 |T|^2) exactly, breaking ties by length
// and then by label sequence.
inline NaiveResult naive_compile(const compiler::GateSet& gates,
                                 const exactnum::CycloMatrix& target,
                                 std::size_t max_len) {
  using exactnum::CycloMatrix;
  using exactnum::Cyclotomic;
  const int order =
      std::lcm(gates.field_order(), exactnum::matrix_order(target));
  const CycloMatrix t = exactnum::embed(target, order);
  const Cyclotomic ft = trace(adjoint(t) * t);
  std::vector<CycloMatrix> mats;
  std::vector<std::string> labels;
  for (const auto& g : gates.gates()) {
    mats.push_back(exactnum::embed(g.matrix, order));
    labels.push_back(g.label);
  }
  const std::size_t d = t.rows();

  NaiveResult best;
  Big best_value = -1;
  bool have = false;
  std::vector<std::size_t> word;
  for (std::size_t len = 0; len <= max_len; ++len) {
    word.assign(len, 0);
    while (true) {
      CycloMatrix u = exactnum::cyclo_identity(d, order);
      std::vector<std::string> text;
      for (std::size_t k : word) {
        u = u * mats[k];
        text.push_back(labels[k]);
      }
      const Cyclotomic tr = trace(adjoint(u) * t);
      const Cyclotomic ov =
          tr * tr.conj() * (trace(adjoint(u) * u) * ft).inverse();
      const Big value = to_big(ov).re;
      bool better = false;
      if (!have) {
        better = true;
      } else if (ov == best.overlap) {
        // Same length or longer: only a smaller label sequence wins, and
        // shorter words were all enumerated first.
        better = text.size() == best.word.size() && text < best.word;
      } else {
        if (abs(value - best_value) < Big("1e-40")) {
          throw std::logic_error("naive oracle cannot separate overlaps");
        }
        better = value > best_value;
      }
      if (better) {
        best.word = text;
        best.overlap = ov;
        best_value = value;
        have = true;
      }
      // Odometer increment over all index tuples.
      std::size_t pos = len;
      while (pos > 0 && ++word[pos - 1] == mats.size()) {
        word[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
  }
  return best;
}

}  // namespace braidgate::testing
