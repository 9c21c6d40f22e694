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
#include <vector>

#include "braidgate/braid/words.hpp"

namespace braidgate::braid {

/// Left-greedy normal form Delta^infimum A_1 ... A_k. Each factor is a
/// permutation braid stored as the array of strands occupying positions
/// 0..n-1 after the braid; factors are neither trivial nor Delta, and
/// consecutive pairs are left-weighted.
struct GarsideNormalForm {
  int strands = 1;
  long infimum = 0;
  std::vector<std::vector<int>> factors;

  friend bool operator==(const GarsideNormalForm&,
                         const GarsideNormalForm&) = default;

  std::string to_string() const;
  /// A word representing the same braid: Delta^infimum then the factors.
  BraidWord to_word() const;
};

GarsideNormalForm garside_normal_form(const BraidWord& w);

/// Decides equality in the braid group. Throws DomainError when the strand
/// counts differ.
bool words_equal(const BraidWord& u, const BraidWord& v);
bool words_equal(const PureBraidWord& u, const PureBraidWord& v);

}  // namespace braidgate::braid
