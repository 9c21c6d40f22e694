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

#include "braidgate/exactnum/rational.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

#include "braidgate/errors.hpp"

namespace braidgate::exactnum {

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (sgn(denominator) == 0) {
    throw DomainError("rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(long numerator, long denominator)
    : Rational(Integer(numerator), Integer(denominator)) {}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) {
    throw DomainError("division by zero rational");
  }
  value_ /= other.value_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) {
    throw DomainError("inverse of zero rational");
  }
  return Rational(mpq_class(1) / value_);
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Integer Rational::ceil() const {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Integer Rational::round() const {
  return (*this + Rational(1, 2)).floor();
}

Rational Rational::mod_one() const {
  return *this - Rational(floor());
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) {
    return value_.get_num().get_str();
  }
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) {
    throw DomainError("negative digit count");
  }
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const Integer scaled = (abs() * Rational(scale)).round();
  std::string body = scaled.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  if (sign() < 0 && sgn(scaled) != 0) {
    body.insert(0, "-");
  }
  return body;
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) {
    throw DomainError("malformed rational: '" + std::string(whole) + "'");
  }
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) {
    throw DomainError("malformed rational: '" + std::string(whole) + "'");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw DomainError("malformed rational: '" + std::string(whole) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

// Accepts "a" or "a^b" with b a non-negative exponent.
Integer parse_power(std::string_view text, std::string_view whole) {
  text = trim(text);
  const auto caret = text.find('^');
  if (caret == std::string_view::npos) {
    return parse_integer(text, whole);
  }
  const Integer base = parse_integer(trim(text.substr(0, caret)), whole);
  const Integer exponent = parse_integer(trim(text.substr(caret + 1)), whole);
  if (sgn(exponent) < 0 || exponent > 100000) {
    throw DomainError("malformed rational: '" + std::string(whole) + "'");
  }
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent.get_ui());
  return result;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string_view whole = trim(text);
  if (const auto slash = whole.find('/'); slash != std::string_view::npos) {
    return Rational(parse_power(whole.substr(0, slash), whole),
                    parse_power(whole.substr(slash + 1), whole));
  }
  std::string_view mantissa = whole;
  long exponent = 0;
  if (const auto e = whole.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = whole.substr(0, e);
    exponent = parse_integer(whole.substr(e + 1), whole).get_si();
  }
  Integer numerator;
  if (const auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string joined(mantissa.substr(0, dot));
    const std::string_view frac = mantissa.substr(dot + 1);
    if (joined.empty() || joined == "-" || joined == "+") {
      joined += "0";
    }
    joined += frac;
    numerator = parse_integer(joined, whole);
    exponent -= static_cast<long>(frac.size());
  } else {
    numerator = parse_integer(mantissa, whole);
  }
  Rational result{numerator};
  if (exponent != 0) {
    result *= pow(Rational(10), exponent);
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    return pow(base.inverse(), -exponent);
  }
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(),
             static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(),
             static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

Rational round_to_grid(const Rational& q, const Integer& grid) {
  return Rational((q * Rational(grid)).round(), grid);
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

}  // namespace braidgate::exactnum
