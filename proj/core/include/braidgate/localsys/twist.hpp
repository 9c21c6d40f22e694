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

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidgate/braid/words.hpp"
#include "braidgate/exactnum/rational.hpp"
#include "braidgate/exactnum/unit_phase.hpp"

namespace braidgate::localsys {

using exactnum::Rational;
using exactnum::UnitPhase;

/// Parameters of the abelian twist: N defect strands carrying weights in
/// {0, ..., level - 2}, followed by n probe strands, at shifted level >= 2.
struct TwistParams {
  int defects = 1;
  int probes = 0;
  int level = 2;
  std::vector<int> weights;

  TwistParams() = default;
  TwistParams(int defects, int probes, int level, std::vector<int> weights);

  int strands() const { return defects + probes; }

  friend bool operator==(const TwistParams&, const TwistParams&) = default;

  /// "N=..;n=..;level=..;weights=w1,..,wN"
  std::string to_string() const;
  static TwistParams parse(std::string_view text);
};

/// kappa = 4, three weight-1 defects, one probe.
TwistParams ising_preset();
/// kappa = 5, three weight-1 defects, one probe.
TwistParams fibonacci_preset();
/// Looks up "ising" or "fibonacci"; throws DomainError otherwise.
TwistParams preset(std::string_view name);

/// Rational exponent r_ab for each pure generator b_ab; the phase of b_ab is
/// exp(2 pi i r_ab).
class PhaseTable {
 public:
  PhaseTable() = default;
  /// All-zero table on the given strand count.
  explicit PhaseTable(int strands);

  int strands() const { return strands_; }
  const Rational& exponent(int a, int b) const;
  void set(int a, int b, const Rational& exponent);
  const std::map<std::pair<int, int>, Rational>& entries() const {
    return entries_;
  }

  friend bool operator==(const PhaseTable&, const PhaseTable&) = default;

  /// One line "a,b=p/q" per generator, in (a, b) order.
  std::string to_string() const;
  static PhaseTable parse(int strands, std::string_view text);

 private:
  int strands_ = 1;
  std::map<std::pair<int, int>, Rational> entries_;
};

/// The twist: b_{I,i} -> w_I / kappa, b_{i,j} -> 2 / kappa and
/// b_{I,J} -> w_I w_J / (2 kappa) for defects I < J and probes i < j.
PhaseTable twist_table(const TwistParams& params);

/// Entries of the table among the first `strands` strands.
PhaseTable restrict_table(const PhaseTable& table, int strands);

/// Group homomorphism from the pure braid group to rational phases defined
/// by an arbitrary table of generator exponents.
class PhaseHomomorphism {
 public:
  explicit PhaseHomomorphism(PhaseTable table) : table_(std::move(table)) {}

  const PhaseTable& table() const { return table_; }
  UnitPhase operator()(const braid::PureBraidWord& w) const;
  UnitPhase operator()(const braid::PureLetter& letter) const;

 private:
  PhaseTable table_;
};

PhaseHomomorphism phases_from_table(const PhaseTable& table);

/// Sum of signed generator exponents, reduced mod 1. Throws DomainError when
/// the word and table disagree on the strand count.
UnitPhase phase_of_word(const PhaseTable& table, const braid::PureBraidWord& w);

}  // namespace braidgate::localsys
