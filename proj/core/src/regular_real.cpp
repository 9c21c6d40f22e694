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

#include "braidgate/exactnum/regular_real.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "braidgate/errors.hpp"

namespace braidgate::exactnum {

struct RegularReal::Node {
  Approximant approximant;
  std::optional<Rational> exact;
  std::mutex mutex;
  std::map<Precision, Rational> memo;
};

RegularReal::RegularReal() : RegularReal(Rational(0)) {}

RegularReal::RegularReal(const Rational& value)
    : node_(std::make_shared<Node>()) {
  node_->exact = value;
  node_->approximant = [value](const Precision&) { return value; };
}

RegularReal::RegularReal(std::shared_ptr<Node> node) : node_(std::move(node)) {}

RegularReal RegularReal::from_approximant(Approximant f) {
  auto node = std::make_shared<Node>();
  node->approximant = std::move(f);
  return RegularReal(std::move(node));
}

Rational RegularReal::at(const Precision& n) const {
  if (sgn(n) <= 0) {
    throw DomainError("precision index must be positive");
  }
  if (node_->exact) {
    return *node_->exact;
  }
  {
    std::lock_guard lock(node_->mutex);
    if (auto it = node_->memo.find(n); it != node_->memo.end()) {
      return it->second;
    }
  }
  Rational value = node_->approximant(n);
  std::lock_guard lock(node_->mutex);
  return node_->memo.emplace(n, std::move(value)).first->second;
}

const std::optional<Rational>& RegularReal::exact_value() const {
  return node_->exact;
}

RegularReal real_from_rational(const Rational& r) { return RegularReal(r); }

RegularReal real_add(const RegularReal& x, const RegularReal& y) {
  if (x.exact_value() && y.exact_value()) {
    return RegularReal(*x.exact_value() + *y.exact_value());
  }
  return RegularReal::from_approximant([x, y](const Precision& n) {
    const Precision m = 2 * n;
    return x.at(m) + y.at(m);
  });
}

RegularReal real_neg(const RegularReal& x) {
  if (x.exact_value()) {
    return RegularReal(-*x.exact_value());
  }
  return RegularReal::from_approximant(
      [x](const Precision& n) { return -x.at(n); });
}

RegularReal real_sub(const RegularReal& x, const RegularReal& y) {
  return real_add(x, real_neg(y));
}

namespace {

Integer canonical_bound(const RegularReal& x) {
  return x.at(1).abs().ceil() + 2;
}

}  // namespace

RegularReal real_mul(const RegularReal& x, const RegularReal& y) {
  if (x.exact_value() && y.exact_value()) {
    return RegularReal(*x.exact_value() * *y.exact_value());
  }
  Integer k = canonical_bound(x);
  if (const Integer ky = canonical_bound(y); ky > k) {
    k = ky;
  }
  return RegularReal::from_approximant([x, y, k](const Precision& n) {
    const Precision m = 2 * k * n;
    return x.at(m) * y.at(m);
  });
}

RegularReal real_abs(const RegularReal& x) {
  if (x.exact_value()) {
    return RegularReal(x.exact_value()->abs());
  }
  return RegularReal::from_approximant(
      [x](const Precision& n) { return x.at(n).abs(); });
}

RegularReal real_inv(const RegularReal& x, int max_bits) {
  if (x.exact_value()) {
    return RegularReal(x.exact_value()->inverse());
  }
  // Find k with |x(k)| > 2/k; then |x| >= |x(k)| - 1/k > 1/k.
  std::optional<Rational> lower;
  for (int bits = 1; bits <= max_bits; ++bits) {
    const Precision k = Precision(1) << bits;
    const Rational v = x.at(k).abs();
    if (v > Rational(Integer(2), k)) {
      lower = v - Rational(Integer(1), k);
      break;
    }
  }
  if (!lower) {
    throw DomainError("cannot invert a real indistinguishable from zero");
  }
  const Rational beta = *lower;
  return RegularReal::from_approximant([x, beta](const Precision& n) {
    // |x(m)| >= beta/2 and |1/x(m) - 1/x| <= 2/(m beta^2) <= 1/(2n).
    Precision m = (Rational(2) / beta).ceil();
    if (const Precision m2 = (Rational(Integer(4 * n)) / (beta * beta)).ceil();
        m2 > m) {
      m = m2;
    }
    return round_to_grid(x.at(m).inverse(), 4 * n);
  });
}

RegularReal real_sqrt(const RegularReal& x) {
  if (x.exact_value() && x.exact_value()->sign() <= 0) {
    return RegularReal(Rational(0));
  }
  return RegularReal::from_approximant([x](const Precision& n) {
    // |sqrt(y) - sqrt(x)| <= sqrt(|y - x|) <= 1/(2n), and the integer square
    // root on the 1/(4n) grid loses at most another 1/(2n).
    Rational y = x.at(4 * n * n);
    if (y.sign() < 0) {
      y = Rational(0);
    }
    const Precision grid = 4 * n;
    const Integer scaled = (y * Rational(Integer(grid * grid))).floor();
    Integer root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    return Rational(root, grid);
  });
}

Precision precision_for(const Rational& eps) {
  if (eps.sign() <= 0) {
    throw DomainError("tolerance must be positive");
  }
  return (Rational(2) / eps).ceil();
}

Rational real_approx(const RegularReal& x, const Rational& eps) {
  return x.at(precision_for(eps));
}

std::optional<int> real_compare(const RegularReal& x, const RegularReal& y,
                                const Rational& eps) {
  const Rational v = real_approx(real_sub(x, y), eps);
  const Rational half = eps / Rational(2);
  if (v > half) {
    return 1;
  }
  if (v < -half) {
    return -1;
  }
  return std::nullopt;
}

std::string to_decimal(const RegularReal& x, const Rational& eps) {
  const Rational half = eps / Rational(2);
  int digits = 0;
  Rational unit(1);
  while (unit > half) {
    unit /= Rational(10);
    ++digits;
  }
  return real_approx(x, half).to_decimal(digits);
}

Rational bbp_partial_sum(int terms) {
  Rational sum(0);
  Rational scale(1);
  for (int k = 0; k < terms; ++k) {
    const long a = 8L * k;
    sum += scale * (Rational(4, a + 1) - Rational(2, a + 4) -
                    Rational(1, a + 5) - Rational(1, a + 6));
    scale /= Rational(16);
  }
  return sum;
}

int bbp_terms_for(const Precision& n) {
  // Terms k >= K contribute at most (4/9)(16/15) 16^-K < (8/3) 16^-K.
  int terms = 1;
  Rational tail(8, 3 * 16);
  const Rational target(Integer(1), n);
  while (tail > target) {
    tail /= Rational(16);
    ++terms;
  }
  return terms;
}

RegularReal pi() {
  static const RegularReal instance = RegularReal::from_approximant(
      [](const Precision& n) { return bbp_partial_sum(bbp_terms_for(n)); });
  return instance;
}

namespace {

// cos(2 pi q) is rational only at these reduced q.
std::optional<Rational> exact_cos_two_pi(const Rational& reduced) {
  const Integer den = reduced.denominator();
  if (den == 1) {
    return Rational(1);
  }
  if (den == 2) {
    return Rational(-1);
  }
  if (den == 4) {
    return Rational(0);
  }
  if (den == 3) {
    return Rational(-1, 2);
  }
  if (den == 6) {
    return Rational(1, 2);
  }
  return std::nullopt;
}

Rational cos_series(const Rational& q, const Precision& n) {
  // q in (-1/2, 1/2], so |theta| <= pi < 4.
  const Precision m = 32 * n;
  const Rational theta =
      round_to_grid(Rational(2) * q * pi().at(m), 64 * n);
  const Rational theta_sq = theta * theta;
  const Rational cutoff(Integer(1), Integer(8 * n));

  Rational sum(0);
  Rational term(1);
  Rational bound(1);  // 4^j / j! bounds |theta|^j / j!
  long j = 0;
  while (true) {
    sum += term;
    term *= -theta_sq / Rational((j + 1) * (j + 2));
    bound *= Rational(16, (j + 1) * (j + 2));
    j += 2;
    if (bound <= cutoff) {
      break;
    }
  }
  return round_to_grid(sum, 16 * n);
}

}  // namespace

RegularReal cos_two_pi(const Rational& q) {
  Rational reduced = q.mod_one();
  if (reduced > Rational(1, 2)) {
    reduced -= Rational(1);
  }
  if (auto exact = exact_cos_two_pi(reduced.abs())) {
    return RegularReal(*exact);
  }
  return RegularReal::from_approximant(
      [reduced](const Precision& n) { return cos_series(reduced, n); });
}

RegularReal sin_two_pi(const Rational& q) {
  return cos_two_pi(q - Rational(1, 4));
}

}  // namespace braidgate::exactnum
