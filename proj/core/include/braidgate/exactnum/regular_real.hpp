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

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "braidgate/exactnum/rational.hpp"

namespace braidgate::exactnum {

/// Precision index n >= 1 of a regular sequence.
using Precision = Integer;

/// Bishop-style regular real: a pure function n -> x(n) of rationals with
/// |x(n) - x(m)| <= 1/n + 1/m. Every constructor in this library produces
/// the stronger bound |x(n) - x| <= 1/n.
///
/// Values are immutable handles; copies share one memo table, so repeated
/// evaluation at the same index is cheap and returns the same rational.
class RegularReal {
 public:
  using Approximant = std::function<Rational(const Precision&)>;

  /// The constant zero sequence.
  RegularReal();
  explicit RegularReal(const Rational& value);

  /// Wraps an approximant. The caller guarantees |f(n) - x| <= 1/n.
  static RegularReal from_approximant(Approximant f);

  Rational at(const Precision& n) const;
  Rational at(std::uint64_t n) const { return at(Precision(n)); }

  /// Set when the sequence is constant (built from a rational).
  const std::optional<Rational>& exact_value() const;

 private:
  struct Node;
  explicit RegularReal(std::shared_ptr<Node> node);
  std::shared_ptr<Node> node_;
};

RegularReal real_from_rational(const Rational& r);

/// (x + y)(n) = x(2n) + y(2n).
RegularReal real_add(const RegularReal& x, const RegularReal& y);
RegularReal real_neg(const RegularReal& x);
RegularReal real_sub(const RegularReal& x, const RegularReal& y);
/// (x y)(n) = x(2Kn) y(2Kn) with K = max over both factors of ceil(|z(1)|) + 2.
RegularReal real_mul(const RegularReal& x, const RegularReal& y);
RegularReal real_abs(const RegularReal& x);
/// 1/x. Searches for a certified lower bound on |x|; throws DomainError if
/// none is found below 2^-max_bits (x is then zero for practical purposes).
RegularReal real_inv(const RegularReal& x, int max_bits = 4096);
/// Square root of max(x, 0).
RegularReal real_sqrt(const RegularReal& x);

inline RegularReal operator+(const RegularReal& x, const RegularReal& y) {
  return real_add(x, y);
}
inline RegularReal operator-(const RegularReal& x, const RegularReal& y) {
  return real_sub(x, y);
}
inline RegularReal operator-(const RegularReal& x) { return real_neg(x); }
inline RegularReal operator*(const RegularReal& x, const RegularReal& y) {
  return real_mul(x, y);
}

/// Least n with 2/n <= eps.
Precision precision_for(const Rational& eps);

/// x(n) for the least n with 2/n <= eps; within eps/2 of x.
Rational real_approx(const RegularReal& x, const Rational& eps);

/// Tolerance-indexed comparison: -1 or +1 when x and y are certifiably
/// apart at tolerance eps, std::nullopt when |x - y| may be below eps.
std::optional<int> real_compare(const RegularReal& x, const RegularReal& y,
                                const Rational& eps);

/// Decimal string within eps of x.
std::string to_decimal(const RegularReal& x, const Rational& eps);

/// Partial sum of the BBP series for pi over k = 0..terms-1.
Rational bbp_partial_sum(int terms);
/// Number of BBP terms whose tail bound (8/3) 16^-terms is at most 1/n.
int bbp_terms_for(const Precision& n);
RegularReal pi();

/// cos(2 pi q) and sin(2 pi q) by Taylor series with explicit remainder.
RegularReal cos_two_pi(const Rational& q);
RegularReal sin_two_pi(const Rational& q);

}  // namespace braidgate::exactnum
