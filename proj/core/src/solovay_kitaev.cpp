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

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "braidgate/compiler/search.hpp"
#include "braidgate/errors.hpp"
#include "numeric.hpp"

namespace braidgate::compiler {

namespace {

using detail::Complex;
using detail::NumMatrix;
using Vec3 = std::array<double, 3>;
using Word = std::vector<std::size_t>;

NumMatrix su2(const NumMatrix& m) {
  const Complex det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return detail::scaled(m, 1.0 / std::sqrt(det));
}

/// exp(-i angle/2 axis.sigma).
NumMatrix rotation(const Vec3& axis, double angle) {
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  const Complex i(0.0, 1.0);
  NumMatrix m(2);
  m(0, 0) = c - i * s * axis[2];
  m(0, 1) = -i * s * axis[0] - s * axis[1];
  m(1, 0) = -i * s * axis[0] + s * axis[1];
  m(1, 1) = c + i * s * axis[2];
  return m;
}

/// Rotation angle in [0, pi] and unit axis of an SU(2) matrix, up to sign.
std::pair<double, Vec3> axis_angle(NumMatrix u) {
  if ((u(0, 0) + u(1, 1)).real() < 0) u = detail::scaled(u, -1.0);
  const double c = std::clamp((u(0, 0) + u(1, 1)).real() / 2, -1.0, 1.0);
  const Complex i(0.0, 1.0);
  Vec3 n{(i * (u(0, 1) + u(1, 0))).real() / 2,
         (u(1, 0) - u(0, 1)).real() / 2,
         (i * (u(0, 0) - u(1, 1))).real() / 2};
  const double s = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  if (s < 1e-300) return {0.0, Vec3{0.0, 0.0, 1.0}};
  for (double& x : n) x /= s;
  return {2 * std::atan2(s, c), n};
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

/// Rotation taking unit vector from to unit vector to.
NumMatrix align(const Vec3& from, const Vec3& to) {
  const double dot = std::clamp(
      from[0] * to[0] + from[1] * to[1] + from[2] * to[2], -1.0, 1.0);
  Vec3 axis = cross(from, to);
  const double norm =
      std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (norm < 1e-12) {
    if (dot > 0) return NumMatrix::identity(2);
    // Antiparallel: any axis perpendicular to from.
    axis = std::abs(from[0]) < 0.9 ? cross(from, Vec3{1, 0, 0})
                                   : cross(from, Vec3{0, 1, 0});
    const double n2 =
        std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    for (double& x : axis) x /= n2;
    return rotation(axis, std::numbers::pi);
  }
  for (double& x : axis) x /= norm;
  return rotation(axis, std::acos(dot));
}

}  // namespace

namespace detail {

std::pair<NumMatrix, NumMatrix> group_commutator(const NumMatrix& delta) {
  const auto [theta, n] = axis_angle(delta);
  const double st = std::sin(theta / 2);
  const double s2 = std::sqrt((1 - std::sqrt(1 - st * st)) / 2);
  const double phi = 2 * std::asin(std::sqrt(s2));
  const NumMatrix v = rotation({1, 0, 0}, phi);
  const NumMatrix w = rotation({0, 1, 0}, phi);
  const NumMatrix c = v * w * adjoint(v) * adjoint(w);
  const auto [theta_c, m] = axis_angle(c);
  (void)theta_c;
  const NumMatrix s = align(m, n);
  return {s * v * adjoint(s), s * w * adjoint(s)};
}

}  // namespace detail

namespace {

class Refiner {
 public:
  Refiner(const GateSet& gates, int net_depth) : gates_(gates) {
    for (const auto& g : gates.gates()) {
      numeric_.push_back(su2(detail::to_numeric(g.matrix)));
    }
    Word w;
    grow(w, NumMatrix::identity(2), net_depth);
  }

  std::size_t net_size() const { return net_.size(); }

  NumMatrix evaluate(const Word& w) const {
    NumMatrix m = NumMatrix::identity(2);
    for (auto k : w) m = m * numeric_[k];
    return m;
  }

  Word inverse(const Word& w) const {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.push_back(gates_.gate(*it).inverse);
    }
    return out;
  }

  Word reduce(const Word& w) const {
    Word out;
    for (auto k : w) {
      if (!out.empty() && gates_.gate(out.back()).inverse == k) {
        out.pop_back();
      } else {
        out.push_back(k);
      }
    }
    return out;
  }

  /// Approximates u at the given recursion depth.
  Word approximate(const NumMatrix& u, int depth) const {
    if (depth == 0) return nearest(u);
    const Word prev = approximate(u, depth - 1);
    return correct(u, prev, depth - 1);
  }

  /// One refinement step: returns V W V^-1 W^-1 prev with V, W compiled at
  /// the given depth.
  Word correct(const NumMatrix& u, const Word& prev, int depth) const {
    const NumMatrix delta = u * adjoint(evaluate(prev));
    const auto [v, w] = detail::group_commutator(delta);
    const Word vw = approximate(v, depth);
    const Word ww = approximate(w, depth);
    Word out = vw;
    out.insert(out.end(), ww.begin(), ww.end());
    const Word vi = inverse(vw);
    const Word wi = inverse(ww);
    out.insert(out.end(), vi.begin(), vi.end());
    out.insert(out.end(), wi.begin(), wi.end());
    out.insert(out.end(), prev.begin(), prev.end());
    return reduce(out);
  }

 private:
  void grow(Word& w, const NumMatrix& m, int remaining) {
    net_.push_back({w, m});
    if (remaining == 0) return;
    for (std::size_t k = 0; k < numeric_.size(); ++k) {
      if (!w.empty() && gates_.gate(w.back()).inverse == k) continue;
      w.push_back(k);
      grow(w, m * numeric_[k], remaining - 1);
      w.pop_back();
    }
  }

  Word nearest(const NumMatrix& u) const {
    double best = -1.0;
    const Word* arg = nullptr;
    for (const auto& [w, m] : net_) {
      const double o = detail::overlap(m, u);
      if (o > best) {
        best = o;
        arg = &w;
      }
    }
    return *arg;
  }

  const GateSet& gates_;
  std::vector<NumMatrix> numeric_;
  std::vector<std::pair<Word, NumMatrix>> net_;
};

}  // namespace

CompileResult solovay_kitaev(const GateSet& gates, const CompileTarget& target,
                             const SKParams& params) {
  if (params.base_net_depth < 0 || params.recursion_depth < 0) {
    throw DomainError("Solovay-Kitaev depths must be nonnegative");
  }
  if (gates.dimension() != 2) {
    throw UnsupportedError(
        "Solovay-Kitaev needs 2x2 gates; use brute_force_compile for "
        "dimension " + std::to_string(gates.dimension()));
  }
  CompileResult best = brute_force_compile(
      gates, target, static_cast<std::size_t>(params.base_net_depth),
      params.certify_eps, {params.workers, true});
  best.stats.depth = 0;
  if (params.recursion_depth == 0 || best.certified_error.is_zero()) {
    return best;
  }

  const Refiner refiner(gates, params.base_net_depth);
  const NumMatrix u = su2(target.is_cyclotomic()
                              ? detail::to_numeric(target.cyclotomic())
                              : detail::to_numeric(target.complex()));
  std::uint64_t nodes = best.stats.nodes + refiner.net_size();
  Word current = gates.indices(best.word);
  for (int depth = 1; depth <= params.recursion_depth; ++depth) {
    current = refiner.correct(u, current, depth - 1);
    const auto labels = gates.labels(current);
    const Rational err =
        certify(gates, labels, target, params.certify_eps);
    if (err < best.certified_error) {
      best.word = labels;
      best.certified_error = err;
    }
    best.stats.depth = static_cast<std::size_t>(depth);
    if (best.certified_error.is_zero()) break;
  }
  best.stats.nodes = nodes;
  return best;
}

}  // namespace braidgate::compiler
