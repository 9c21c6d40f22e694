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

#include "braidgate/monodromy/gassner.hpp"

#include <cstdlib>
#include <numeric>

#include "braidgate/errors.hpp"
#include "braidgate/monodromy/free_group.hpp"

namespace braidgate::monodromy {

LocalRank1System::LocalRank1System(std::vector<UnitPhase> t, int field_order)
    : t_(std::move(t)) {
  if (t_.empty()) {
    throw DomainError("a local system needs at least one puncture");
  }
  int lcm = 1;
  for (const auto& p : t_) lcm = std::lcm(lcm, p.order());
  if (field_order == 0) {
    field_order_ = lcm;
  } else {
    if (field_order < 0 || field_order % lcm != 0) {
      throw DomainError("field order " + std::to_string(field_order) +
                        " does not contain all puncture phases (need a "
                        "multiple of " + std::to_string(lcm) + ")");
    }
    field_order_ = field_order;
  }
  values_.reserve(t_.size());
  for (const auto& p : t_) values_.push_back(p.to_cyclotomic(field_order_));
}

LocalRank1System LocalRank1System::uniform(int punctures, const UnitPhase& t,
                                           int field_order) {
  if (punctures < 1) {
    throw DomainError("a local system needs at least one puncture");
  }
  return LocalRank1System(
      std::vector<UnitPhase>(static_cast<std::size_t>(punctures), t),
      field_order);
}

LocalRank1System LocalRank1System::from_params(
    const localsys::TwistParams& params) {
  std::vector<UnitPhase> t;
  for (int w : params.weights) {
    t.emplace_back(Rational(w) / Rational(params.level));
  }
  return LocalRank1System(std::move(t), 2 * params.level);
}

UnitPhase LocalRank1System::total() const {
  UnitPhase p;
  for (const auto& x : t_) p = p * x;
  return p;
}

bool LocalRank1System::all_trivial() const {
  for (const auto& x : t_) {
    if (!x.is_one()) return false;
  }
  return true;
}

LocalRank1System LocalRank1System::permuted(const braid::BraidWord& w) const {
  if (w.strands() != punctures()) {
    throw DomainError("braid on " + std::to_string(w.strands()) +
                      " strands acting on " + std::to_string(punctures()) +
                      " punctures");
  }
  std::vector<UnitPhase> t = t_;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    const auto i = static_cast<std::size_t>(std::abs(*it));
    std::swap(t[i - 1], t[i]);
  }
  return LocalRank1System(std::move(t), field_order_);
}

namespace {

void require_punctures(int strands, const LocalRank1System& sys) {
  if (strands != sys.punctures()) {
    throw DomainError("braid on " + std::to_string(strands) +
                      " strands evaluated on a local system with " +
                      std::to_string(sys.punctures()) + " punctures");
  }
}

}  // namespace

CycloMatrix magnus_matrix(const braid::BraidWord& w,
                          const LocalRank1System& sys) {
  require_punctures(w.strands(), sys);
  const int order = sys.field_order();
  const auto n = static_cast<std::size_t>(sys.punctures());
  const Cyclotomic one = Cyclotomic::one(order);
  CycloMatrix m = exactnum::cyclo_identity(n, order);
  std::vector<Cyclotomic> t = sys.values();
  std::vector<Cyclotomic> t_inv;
  for (const auto& x : t) t_inv.push_back(x.inverse());

  // Letters are applied right to left; each left factor is the generator
  // block at the colors permuted by everything to its right.
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    const auto i = static_cast<std::size_t>(std::abs(*it)) - 1;
    const Cyclotomic& a = t[i];
    const Cyclotomic& b = t[i + 1];
    Cyclotomic b00, b01, b10, b11;
    if (*it > 0) {
      b00 = one - b;
      b01 = a;
      b10 = one;
      b11 = Cyclotomic::zero(order);
    } else {
      const Cyclotomic& b_inv = t_inv[i + 1];
      b00 = Cyclotomic::zero(order);
      b01 = one;
      b10 = b_inv;
      b11 = b_inv * (a - one);
    }
    for (std::size_t c = 0; c < n; ++c) {
      const Cyclotomic top = m(i, c);
      const Cyclotomic bottom = m(i + 1, c);
      m(i, c) = b00 * top + b01 * bottom;
      m(i + 1, c) = b10 * top + b11 * bottom;
    }
    std::swap(t[i], t[i + 1]);
    std::swap(t_inv[i], t_inv[i + 1]);
  }
  return m;
}

CycloMatrix magnus_matrix(const braid::PureBraidWord& w,
                          const LocalRank1System& sys) {
  require_punctures(w.strands(), sys);
  return magnus_matrix(braid::embed_pure(w), sys);
}

CycloMatrix magnus_matrix_fox(const braid::BraidWord& w,
                              const LocalRank1System& sys) {
  require_punctures(w.strands(), sys);
  const BraidAutomorphism phi = braid_to_automorphism(w);
  const auto n = static_cast<std::size_t>(sys.punctures());
  CycloMatrix m = exactnum::cyclo_zero(n, n, sys.field_order());
  for (int j = 1; j <= sys.punctures(); ++j) {
    for (int k = 1; k <= sys.punctures(); ++k) {
      m(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(k - 1)) =
          fox_derivative(phi.image(j), k).evaluate(sys.values());
    }
  }
  return m;
}

CycloMatrix ReducedFiber::reduce(const CycloMatrix& m) const {
  return projection * m * section;
}

ReducedFiber reduced_fiber(const LocalRank1System& sys) {
  const int order = sys.field_order();
  const auto n = static_cast<std::size_t>(sys.punctures());
  const Cyclotomic one = Cyclotomic::one(order);
  ReducedFiber f;
  f.punctures = sys.punctures();
  for (std::size_t k = 0; k < n; ++k) {
    f.boundary.push_back(sys.values()[k] - one);
    if (f.pivot < 0 && !sys.phases()[k].is_one()) {
      f.pivot = static_cast<int>(k);
    }
  }
  if (f.pivot < 0) {
    f.dimension = n;
    f.projection = exactnum::cyclo_identity(n, order);
    f.section = exactnum::cyclo_identity(n, order);
    return f;
  }
  const auto p = static_cast<std::size_t>(f.pivot);
  f.dimension = n - 1;
  f.projection = exactnum::cyclo_zero(n - 1, n, order);
  f.section = exactnum::cyclo_zero(n, n - 1, order);
  const Cyclotomic pivot_inv = f.boundary[p].inverse();
  std::size_t r = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == p) continue;
    f.projection(r, k) = one;
    f.projection(r, p) = -(f.boundary[k] * pivot_inv);
    f.section(k, r) = one;
    ++r;
  }
  return f;
}

CycloMatrix reduced_magnus_matrix(const braid::PureBraidWord& w,
                                  const LocalRank1System& sys) {
  return reduced_fiber(sys).reduce(magnus_matrix(w, sys));
}

}  // namespace braidgate::monodromy
