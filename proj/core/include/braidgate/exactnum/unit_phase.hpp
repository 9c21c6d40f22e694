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

#include <string>

#include "braidgate/exactnum/cyclotomic.hpp"
#include "braidgate/exactnum/rational.hpp"

namespace braidgate::exactnum {

/// exp(2 pi i * exponent) for a rational exponent kept in [0, 1).
class UnitPhase {
 public:
  UnitPhase() = default;
  explicit UnitPhase(const Rational& exponent)
      : exponent_(exponent.mod_one()) {}

  const Rational& exponent() const { return exponent_; }
  bool is_one() const { return exponent_.is_zero(); }

  UnitPhase operator*(const UnitPhase& other) const {
    return UnitPhase(exponent_ + other.exponent_);
  }
  UnitPhase inverse() const { return UnitPhase(-exponent_); }
  UnitPhase pow(long k) const { return UnitPhase(exponent_ * Rational(k)); }

  friend bool operator==(const UnitPhase&, const UnitPhase&) = default;

  /// Smallest L with phase^L = 1.
  int order() const {
    return static_cast<int>(exponent_.denominator().get_si());
  }
  Cyclotomic to_cyclotomic() const { return exp_two_pi_i(exponent_); }
  Cyclotomic to_cyclotomic(int field_order) const {
    return exp_two_pi_i(exponent_, field_order);
  }

  std::string to_string() const { return exponent_.to_string(); }

 private:
  Rational exponent_{0};
};

}  // namespace braidgate::exactnum
