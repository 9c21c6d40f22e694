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

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace braidgate::exactnum {

using Integer = mpz_class;

/// Exact rational number p/q in lowest terms with q >= 1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& value) : value_(value) {}
  Rational(const Integer& numerator, const Integer& denominator);
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  /// Multiplicative inverse; throws DomainError on zero.
  Rational inverse() const;
  Rational abs() const { return Rational(mpq_class(::abs(value_))); }

  Integer floor() const;
  Integer ceil() const;
  /// Nearest integer, ties rounded toward +infinity.
  Integer round() const;
  /// Representative of this value modulo 1, in [0, 1).
  Rational mod_one() const;

  double to_double() const { return value_.get_d(); }

  /// "p/q", or "p" when q = 1.
  std::string to_string() const;
  /// Fixed-point decimal with `digits` fractional digits, rounded to nearest.
  std::string to_decimal(int digits) const;

  /// Accepts "p/q", "p", and finite decimals such as "-0.125" or "1e-8".
  /// Numerator and denominator may be integer powers, as in "1/10^8".
  static Rational parse(std::string_view text);

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational pow(const Rational& base, long exponent);

/// round(q * grid) / grid; the result is within 1/(2 grid) of q.
Rational round_to_grid(const Rational& q, const Integer& grid);

/// Least common multiple of two positive integers.
Integer lcm(const Integer& a, const Integer& b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

}  // namespace braidgate::exactnum
