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

#include <cstdint>
#include <string>
#include <vector>

#include "braidgate/compiler/gate_set.hpp"
#include "braidgate/compiler/target.hpp"

namespace braidgate::compiler {

struct SearchStats {
  /// Words visited, including prefixes.
  std::uint64_t nodes = 0;
  /// Longest word length fully explored (brute force) or recursion depth
  /// reached (Solovay-Kitaev).
  std::size_t depth = 0;
  /// Candidate comparisons that had to be settled exactly.
  std::uint64_t exact_comparisons = 0;
};

struct CompileResult {
  std::vector<std::string> word;
  Rational certified_error;
  SearchStats stats;
};

struct BruteForceOptions {
  unsigned workers = 1;
  /// Skip words containing a gate followed by its inverse.
  bool prune = true;
};

/// Exhaustive search over words of length <= max_len, one length at a time.
///
/// Returns the word closest to the target; ties go to the shorter word and
/// then to the lexicographically smaller label sequence. Candidates are
/// screened in double precision and every comparison closer than a fixed
/// margin is settled exactly, so the result does not depend on the worker
/// count. The search stops after the first complete length whose best word
/// certifies to within eps.
CompileResult brute_force_compile(const GateSet& gates,
                                  const CompileTarget& target,
                                  std::size_t max_len, const Rational& eps,
                                  const BruteForceOptions& options = {});

struct SKParams {
  int base_net_depth = 6;
  int recursion_depth = 2;
  /// Tolerance handed to certify for every candidate.
  Rational certify_eps{1, 1000000};
  unsigned workers = 1;
};

/// Solovay-Kitaev refinement for 2x2 gate sets.
///
/// Depth 0 is brute_force_compile at base_net_depth. Each further level
/// corrects the previous word U by a balanced group commutator
/// V W V^-1 W^-1 approximating target * U^-1, with V and W compiled
/// recursively against a double-precision net of all words up to
/// base_net_depth. Every level is certified exactly and the best certified
/// word so far is kept, so the error never increases with depth.
///
/// Assumes the gates generate a dense subgroup of SU(2) up to scalars.
/// Throws UnsupportedError when the dimension is not 2.
CompileResult solovay_kitaev(const GateSet& gates, const CompileTarget& target,
                             const SKParams& params);

}  // namespace braidgate::compiler
