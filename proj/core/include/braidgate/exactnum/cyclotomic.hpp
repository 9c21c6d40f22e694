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
#include <string_view>
#include <utility>
#include <vector>

#include "braidgate/exactnum/complex.hpp"
#include "braidgate/exactnum/rational.hpp"

namespace braidgate::exactnum {

/// Euler's totient.
int euler_phi(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree
/// first. Computed by dividing x^n - 1 by Phi_d for the proper divisors d.
const std::vector<Integer>& cyclotomic_polynomial(int n);

/// Element of the cyclotomic field Q(zeta_L), stored by its coordinates in
/// the power basis 1, zeta, ..., zeta^(phi(L)-1).
///
/// Arithmetic between elements of different orders throws DimensionError;
/// call embed() or unify() first. Equality compares in the common field.
class Cyclotomic {
 public:
  /// Zero of Q (order 1).
  Cyclotomic();
  /// Reduces an arbitrary-length coefficient list modulo Phi_order.
  Cyclotomic(int order, std::vector<Rational> coeffs);

  static Cyclotomic zero(int order);
  static Cyclotomic one(int order);
  static Cyclotomic from_rational(int order, const Rational& r);
  /// zeta_order^power, for any integer power.
  static Cyclotomic zeta(int order, long power = 1);

  int order() const { return order_; }
  int degree() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Rational& scalar);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) {
    return a += b;
  }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) {
    return a -= b;
  }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) {
    return a *= b;
  }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& s) {
    return a *= s;
  }
  friend Cyclotomic operator*(const Rational& s, Cyclotomic a) {
    return a *= s;
  }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Complex conjugate: zeta -> zeta^(L-1).
  Cyclotomic conj() const;
  /// Multiplicative inverse via the extended Euclidean algorithm over Q[x].
  Cyclotomic inverse() const;
  /// Image under zeta_L -> zeta_M^(M/L); requires L | M.
  Cyclotomic embed(int target_order) const;

  /// "L;c0,c1,...,c_{phi(L)-1}"
  std::string to_string() const;
  static Cyclotomic parse(std::string_view text);
  /// Parses a bare coefficient list "c0,c1,..." in a known order.
  static Cyclotomic parse_coeffs(int order, std::string_view text);
  std::string coeffs_to_string() const;

 private:
  int order_ = 1;
  std::vector<Rational> coeffs_;
};

inline Cyclotomic conj(const Cyclotomic& a) { return a.conj(); }

/// Embeds both operands into the field of order lcm(a.order(), b.order()).
std::pair<Cyclotomic, Cyclotomic> unify(const Cyclotomic& a,
                                        const Cyclotomic& b);

/// exp(2 pi i q) = zeta_L^p for q mod 1 = p/L, in the field of order L.
Cyclotomic exp_two_pi_i(const Rational& q);
/// exp(2 pi i q) embedded into the field of the given order.
Cyclotomic exp_two_pi_i(const Rational& q, int order);

/// Rational within 1/n of Re(a) (resp. Im(a)).
Rational real_part_approx(const Cyclotomic& a, const Precision& n);
Rational imag_part_approx(const Cyclotomic& a, const Precision& n);

/// Numeric embedding zeta_L -> (cos, sin)(2 pi / L).
ExactComplex cyclo_to_complex(const Cyclotomic& a);

/// Exact sign of Re(a): decided as zero symbolically, otherwise by
/// evaluating at increasing precision until separated from zero.
int real_part_sign(const Cyclotomic& a);

}  // namespace braidgate::exactnum
