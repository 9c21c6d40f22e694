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

namespace braidgate::braid {

/// Artin relators: [sigma_i, sigma_j] for j >= i + 2, then
/// sigma_i sigma_{i+1} sigma_i (sigma_{i+1} sigma_i sigma_{i+1})^-1.
/// Each family is listed in lexicographic order of its index tuple.
std::vector<BraidWord> relators(int strands);

/// Relators of the pure braid presentation on the generators b_ij:
///   [b_ij, b_rs]                      for r < s < i < j or i < r < s < j,
///   b_ij b_ri b_rj = b_ri b_rj b_ij = b_rj b_ij b_ri   for r < i < j,
///   [b_rs, b_rj b_ij b_sj]            for r < i < s < j.
/// The cyclic family contributes two relators per triple.
std::vector<PureBraidWord> pure_relators(int strands);

}  // namespace braidgate::braid
