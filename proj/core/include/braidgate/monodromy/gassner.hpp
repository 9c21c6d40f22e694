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

#include <vector>

#include "braidgate/braid/words.hpp"
#include "braidgate/exactnum/matrix.hpp"
#include "braidgate/exactnum/unit_phase.hpp"
#include "braidgate/localsys/twist.hpp"

namespace braidgate::monodromy {

using exactnum::CycloMatrix;
using exactnum::Cyclotomic;
using exactnum::Rational;
using exactnum::UnitPhase;

/// Rank-one local system on the N-punctured plane: the loop around puncture
/// I acts by the root of unity t_I. Matrix entries live in the cyclotomic
/// field of the given order.
class LocalRank1System {
 public:
  LocalRank1System() = default;
  /// A field order of 0 selects the least common multiple of the phase
  /// orders. A nonzero order must be a multiple of every phase order.
  explicit LocalRank1System(std::vector<UnitPhase> t, int field_order = 0);

  /// Every puncture carries the same phase.
  static LocalRank1System uniform(int punctures, const UnitPhase& t,
                                  int field_order = 0);
  /// t_I = exp(2 pi i w_I / kappa) over the field of order 2 kappa, which
  /// also holds the defect-defect twist phases.
  static LocalRank1System from_params(const localsys::TwistParams& params);

  int punctures() const { return static_cast<int>(t_.size()); }
  int field_order() const { return field_order_; }
  const std::vector<UnitPhase>& phases() const { return t_; }
  const std::vector<Cyclotomic>& values() const { return values_; }

  /// Product of all puncture phases (the monodromy around infinity).
  UnitPhase total() const;
  bool all_trivial() const;
  /// Phases after the braid permutes the punctures: entry k is the phase
  /// of the puncture that the braid carries into position k.
  LocalRank1System permuted(const braid::BraidWord& w) const;

  friend bool operator==(const LocalRank1System& a,
                         const LocalRank1System& b) {
    return a.t_ == b.t_ && a.field_order_ == b.field_order_;
  }

 private:
  std::vector<UnitPhase> t_;
  int field_order_ = 1;
  std::vector<Cyclotomic> values_;
};

/// Magnus matrix of a braid: entry (j, k) is d phi(x_j) / d x_k evaluated
/// at x_I -> t_I, where phi is braid_to_automorphism(w).
///
/// With this convention M(uv) = M(u) M(v) for pure braids, so transport of
/// a concatenation is the matrix product in the same order. For braids with
/// a nontrivial permutation the colors of u are the ones permuted by v:
/// M_t(uv) = M_{t'}(u) M_t(v) with t' = sys.permuted(v).
///
/// Computed letter by letter from closed-form generator blocks.
CycloMatrix magnus_matrix(const braid::BraidWord& w,
                          const LocalRank1System& sys);
CycloMatrix magnus_matrix(const braid::PureBraidWord& w,
                          const LocalRank1System& sys);

/// Same matrix computed from the Fox Jacobian of the full automorphism.
/// Cost grows exponentially with word length; intended for short words.
CycloMatrix magnus_matrix_fox(const braid::BraidWord& w,
                              const LocalRank1System& sys);

/// First cohomology of the twisted cochain complex C^0 -> C^1 of the wedge
/// of N circles, with C^0 = K, C^1 = K^N and boundary 1 -> (t_k - 1)_k.
///
/// Every Magnus matrix of a pure braid fixes the boundary column, so it acts
/// on the cokernel. The basis of the cokernel is the image of the standard
/// vectors e_k with k != pivot, where pivot is the first index with
/// t_k != 1. Without a pivot the boundary vanishes and the fiber is all of
/// C^1.
struct ReducedFiber {
  int punctures = 0;
  std::size_t dimension = 0;
  std::vector<Cyclotomic> boundary;
  /// 0-based pivot index, or -1 when the boundary vanishes.
  int pivot = -1;
  /// dimension x N projection onto the cokernel basis.
  CycloMatrix projection;
  /// N x dimension inclusion of the basis vectors.
  CycloMatrix section;

  /// projection * m * section.
  CycloMatrix reduce(const CycloMatrix& m) const;
};

ReducedFiber reduced_fiber(const LocalRank1System& sys);

/// Reduced Magnus matrix of a pure braid.
CycloMatrix reduced_magnus_matrix(const braid::PureBraidWord& w,
                                  const LocalRank1System& sys);

}  // namespace braidgate::monodromy
