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

#include "braidgate/exactnum/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "braidgate/errors.hpp"

namespace braidgate::exactnum {

namespace {

using Poly = std::vector<Rational>;

struct OrderData {
  int order = 1;
  int phi = 1;
  std::vector<Integer> modulus;              // Phi_L, monic, length phi + 1
  std::vector<std::vector<Integer>> powers;  // x^j mod Phi_L for 0 <= j < L
  std::vector<RegularReal> cos_table;        // cos(2 pi k / L), k < phi
  std::vector<RegularReal> sin_table;
};

std::recursive_mutex& registry_mutex() {
  static std::recursive_mutex m;
  return m;
}

std::vector<Integer> compute_cyclotomic_polynomial(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<Integer> p(static_cast<std::size_t>(n) + 1, Integer(0));
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) {
      continue;
    }
    const std::vector<Integer>& divisor = cyclotomic_polynomial(d);
    const std::size_t dd = divisor.size() - 1;
    std::vector<Integer> quotient(p.size() - dd, Integer(0));
    for (std::size_t i = p.size() - 1; i + 1 > dd; --i) {
      const Integer c = p[i];
      if (sgn(c) == 0) {
        if (i == dd) break;
        continue;
      }
      quotient[i - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) {
        p[i - dd + j] -= c * divisor[j];
      }
      if (i == dd) break;
    }
    p = std::move(quotient);
  }
  return p;
}

const OrderData& order_data(int order) {
  if (order < 1) {
    throw DomainError("cyclotomic order must be positive");
  }
  static std::map<int, std::unique_ptr<OrderData>> registry;
  std::lock_guard lock(registry_mutex());
  if (auto it = registry.find(order); it != registry.end()) {
    return *it->second;
  }
  auto data = std::make_unique<OrderData>();
  data->order = order;
  data->phi = euler_phi(order);
  data->modulus = cyclotomic_polynomial(order);
  const auto phi = static_cast<std::size_t>(data->phi);

  std::vector<Integer> current(phi, Integer(0));
  current[0] = 1;
  data->powers.reserve(static_cast<std::size_t>(order));
  for (int j = 0; j < order; ++j) {
    data->powers.push_back(current);
    // multiply by x and reduce the overflow coefficient
    const Integer top = current[phi - 1];
    for (std::size_t i = phi - 1; i > 0; --i) {
      current[i] = current[i - 1];
    }
    current[0] = 0;
    if (sgn(top) != 0) {
      for (std::size_t i = 0; i < phi; ++i) {
        current[i] -= top * data->modulus[i];
      }
    }
  }
  for (int k = 0; k < data->phi; ++k) {
    data->cos_table.push_back(cos_two_pi(Rational(k, order)));
    data->sin_table.push_back(sin_two_pi(Rational(k, order)));
  }
  return *registry.emplace(order, std::move(data)).first->second;
}

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) {
    p.pop_back();
  }
}

// Divides a by b (b nonzero, trimmed); returns quotient, leaves remainder in a.
Poly poly_divmod(Poly& a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) {
    return {};
  }
  Poly quotient(a.size() - b.size() + 1, Rational(0));
  const Rational lead_inv = b.back().inverse();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    const Rational c = a[i] * lead_inv;
    if (!c.is_zero()) {
      quotient[i - (b.size() - 1)] = c;
      for (std::size_t j = 0; j < b.size(); ++j) {
        a[i - (b.size() - 1) + j] -= c * b[j];
      }
    }
    if (i == b.size() - 1) break;
  }
  trim(a);
  return quotient;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) {
    return {};
  }
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) {
    a.resize(b.size(), Rational(0));
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    a[i] -= b[i];
  }
  trim(a);
  return a;
}

// Reduces coefficients of x^j (any j >= 0) into the power basis.
std::vector<Rational> reduce(const OrderData& data, const Poly& p) {
  const auto phi = static_cast<std::size_t>(data.phi);
  std::vector<Rational> out(phi, Rational(0));
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j].is_zero()) continue;
    if (j < phi) {
      out[j] += p[j];
      continue;
    }
    const auto& power = data.powers[j % static_cast<std::size_t>(data.order)];
    for (std::size_t i = 0; i < phi; ++i) {
      if (sgn(power[i]) != 0) {
        out[i] += p[j] * Rational(power[i]);
      }
    }
  }
  return out;
}

void require_same_order(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order() != b.order()) {
    throw DimensionError("cyclotomic order mismatch: " +
                         std::to_string(a.order()) + " vs " +
                         std::to_string(b.order()));
  }
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

int euler_phi(int n) {
  if (n < 1) {
    throw DomainError("totient of non-positive integer");
  }
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<Integer>& cyclotomic_polynomial(int n) {
  if (n < 1) {
    throw DomainError("cyclotomic polynomial index must be positive");
  }
  static std::map<int, std::vector<Integer>> cache;
  std::lock_guard lock(registry_mutex());
  if (auto it = cache.find(n); it != cache.end()) {
    return it->second;
  }
  auto poly = compute_cyclotomic_polynomial(n);
  return cache.emplace(n, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> coeffs)
    : order_(order) {
  coeffs_ = reduce(order_data(order), coeffs);
}

Cyclotomic Cyclotomic::zero(int order) {
  return Cyclotomic(order, {});
}

Cyclotomic Cyclotomic::one(int order) { return from_rational(order, 1); }

Cyclotomic Cyclotomic::from_rational(int order, const Rational& r) {
  return Cyclotomic(order, {r});
}

Cyclotomic Cyclotomic::zeta(int order, long power) {
  const OrderData& data = order_data(order);
  long j = power % order;
  if (j < 0) j += order;
  Cyclotomic result = zero(order);
  const auto& p = data.powers[static_cast<std::size_t>(j)];
  for (std::size_t i = 0; i < p.size(); ++i) {
    result.coeffs_[i] = Rational(p[i]);
  }
  return result;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  require_same_order(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] += other.coeffs_[i];
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
  require_same_order(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] -= other.coeffs_[i];
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  require_same_order(*this, other);
  if (other.is_rational()) {
    return *this *= other.coeffs_[0];
  }
  if (is_rational()) {
    const Rational s = coeffs_[0];
    *this = other;
    return *this *= s;
  }
  coeffs_ = reduce(order_data(order_), poly_mul(coeffs_, other.coeffs_));
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) {
    return a.coeffs_ == b.coeffs_;
  }
  auto [x, y] = unify(a, b);
  return x.coeffs_ == y.coeffs_;
}

Cyclotomic Cyclotomic::conj() const {
  if (is_rational()) {
    return *this;
  }
  const OrderData& data = order_data(order_);
  Poly p(static_cast<std::size_t>(order_), Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const std::size_t j = (static_cast<std::size_t>(order_) - k) %
                          static_cast<std::size_t>(order_);
    p[j] += coeffs_[k];
  }
  return Cyclotomic(order_, reduce(data, p));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) {
    throw DomainError("inverse of zero in cyclotomic field");
  }
  if (is_rational()) {
    return from_rational(order_, coeffs_[0].inverse());
  }
  const OrderData& data = order_data(order_);
  Poly r0;
  for (const auto& c : data.modulus) r0.emplace_back(c);
  Poly r1 = coeffs_;
  trim(r1);
  Poly s0;
  Poly s1{Rational(1)};
  while (!r1.empty()) {
    Poly rem = r0;
    const Poly q = poly_divmod(rem, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    Poly next = poly_sub(s0, poly_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(next);
  }
  // r0 is a nonzero constant because Phi_L is irreducible.
  const Rational scale = r0.front().inverse();
  for (auto& c : s0) c *= scale;
  return Cyclotomic(order_, s0);
}

Cyclotomic Cyclotomic::embed(int target_order) const {
  if (target_order == order_) {
    return *this;
  }
  if (target_order < 1 || target_order % order_ != 0) {
    throw DimensionError("cannot embed order " + std::to_string(order_) +
                         " into order " + std::to_string(target_order));
  }
  const int step = target_order / order_;
  Poly p(static_cast<std::size_t>(target_order), Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    p[k * static_cast<std::size_t>(step)] += coeffs_[k];
  }
  return Cyclotomic(target_order, std::move(p));
}

std::string Cyclotomic::coeffs_to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += coeffs_[i].to_string();
  }
  return out;
}

std::string Cyclotomic::to_string() const {
  return std::to_string(order_) + ";" + coeffs_to_string();
}

Cyclotomic Cyclotomic::parse_coeffs(int order, std::string_view text) {
  std::vector<Rational> coeffs;
  bool blank = true;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t' && ch != '\r' && ch != '\n') blank = false;
  }
  if (!blank) {
    for (auto part : split(text, ',')) {
      coeffs.push_back(Rational::parse(part));
    }
  }
  if (order < 1 ||
      coeffs.size() > static_cast<std::size_t>(euler_phi(order))) {
    throw DomainError("expected at most phi(" + std::to_string(order) +
                      ") coefficients, got " + std::to_string(coeffs.size()));
  }
  return Cyclotomic(order, std::move(coeffs));
}

Cyclotomic Cyclotomic::parse(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) {
    throw DomainError("cyclotomic text must look like 'L;c0,c1,...': '" +
                      std::string(text) + "'");
  }
  const Rational order = Rational::parse(text.substr(0, semi));
  if (order.denominator() != 1 || order.sign() <= 0 ||
      order > Rational(1L << 20)) {
    throw DomainError("invalid cyclotomic order in '" + std::string(text) +
                      "'");
  }
  return parse_coeffs(static_cast<int>(order.numerator().get_si()),
                      text.substr(semi + 1));
}

std::pair<Cyclotomic, Cyclotomic> unify(const Cyclotomic& a,
                                        const Cyclotomic& b) {
  const int order = std::lcm(a.order(), b.order());
  return {a.embed(order), b.embed(order)};
}

Cyclotomic exp_two_pi_i(const Rational& q) {
  const Rational reduced = q.mod_one();
  const Integer den = reduced.denominator();
  if (den > Integer(1L << 20)) {
    throw UnsupportedError("phase denominator too large for a cyclotomic field");
  }
  return Cyclotomic::zeta(static_cast<int>(den.get_si()),
                          reduced.numerator().get_si());
}

Cyclotomic exp_two_pi_i(const Rational& q, int order) {
  return exp_two_pi_i(q).embed(order);
}

namespace {

Rational table_approx(const Cyclotomic& a, const Precision& n, bool imag) {
  const OrderData& data = order_data(a.order());
  const auto& c = a.coeffs();
  Rational weight(0);
  for (std::size_t k = 1; k < c.size(); ++k) {
    weight += c[k].abs();
  }
  if (weight.is_zero()) {
    return imag ? Rational(0) : c[0];
  }
  // Each table entry within 1/m with m >= 2n(ceil(weight) + 1), m a power of
  // two so the per-entry memo tables stay small.
  const Precision need = 2 * n * (weight.ceil() + 1);
  Precision m(1);
  while (m < need) m <<= 1;
  Rational sum = imag ? Rational(0) : c[0];
  const auto& table = imag ? data.sin_table : data.cos_table;
  for (std::size_t k = 1; k < c.size(); ++k) {
    if (!c[k].is_zero()) {
      sum += c[k] * table[k].at(m);
    }
  }
  return round_to_grid(sum, 4 * n);
}

}  // namespace

Rational real_part_approx(const Cyclotomic& a, const Precision& n) {
  return table_approx(a, n, false);
}

Rational imag_part_approx(const Cyclotomic& a, const Precision& n) {
  return table_approx(a, n, true);
}

ExactComplex cyclo_to_complex(const Cyclotomic& a) {
  if (a.is_rational()) {
    return ExactComplex(a.coeffs()[0]);
  }
  return ExactComplex(
      RegularReal::from_approximant(
          [a](const Precision& n) { return real_part_approx(a, n); }),
      RegularReal::from_approximant(
          [a](const Precision& n) { return imag_part_approx(a, n); }));
}

int real_part_sign(const Cyclotomic& a) {
  const Cyclotomic twice_re = a + a.conj();
  if (twice_re.is_zero()) {
    return 0;
  }
  if (twice_re.is_rational()) {
    return twice_re.coeffs()[0].sign();
  }
  for (int bits = 8;; bits *= 2) {
    const Precision n = Precision(1) << bits;
    const Rational v = real_part_approx(twice_re, n);
    const Rational tol(Integer(1), n);
    if (v > tol) return 1;
    if (v < -tol) return -1;
  }
}

}  // namespace braidgate::exactnum
