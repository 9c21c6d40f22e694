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
#include <string_view>
#include <variant>
#include <vector>

#include "braidgate/compiler/gate_set.hpp"
#include "braidgate/exactnum/matrix.hpp"
#include "braidgate/exactnum/regular_real.hpp"

namespace braidgate::compiler {

using exactnum::ComplexMatrix;
using exactnum::RegularReal;

/// Matrix to approximate: cyclotomic entries, or regular-real complex
/// entries for targets outside any cyclotomic field.
class CompileTarget {
 public:
  CompileTarget() = default;
  explicit CompileTarget(CycloMatrix m);
  explicit CompileTarget(ComplexMatrix m);

  std::size_t dimension() const { return dimension_; }
  bool is_cyclotomic() const {
    return std::holds_alternative<CycloMatrix>(matrix_);
  }
  const CycloMatrix& cyclotomic() const {
    return std::get<CycloMatrix>(matrix_);
  }
  const ComplexMatrix& complex() const {
    return std::get<ComplexMatrix>(matrix_);
  }
  ComplexMatrix as_complex() const;

  /// Header "d=K;field=cyclo:L" or "d=K;field=complex", then one line per
  /// row with ';'-separated entries. Cyclotomic entries are coefficient
  /// lists "c0,c1,..." (or full "L;c0,..." pairs); complex entries are
  /// "re,im" with rational parts.
  std::string to_string() const;
  static CompileTarget parse(std::string_view text);

 private:
  std::size_t dimension_ = 0;
  std::variant<CycloMatrix, ComplexMatrix> matrix_;
};

CompileTarget read_target(const std::string& path);
void write_target(const CompileTarget& target, const std::string& path);

/// Projective distance sqrt(1 - |tr(U^dagger V)| / (||U||_F ||V||_F)).
///
/// For unitaries ||U||_F = sqrt(d), giving sqrt(1 - |tr(U^dagger V)|/d).
/// With a in [0, pi/2] the Fubini-Study angle between the complex lines
/// spanned by U and V in C^{d*d}, the value is sqrt(1 - cos a) =
/// sqrt(2) sin(a/2). It vanishes exactly when V is a nonzero scalar multiple
/// of U and is symmetric. Since sin(a/2) is increasing and subadditive on
/// [0, pi] and a satisfies the triangle inequality, so does the distance,
/// with constant 1.
///
/// Throws DimensionError for mismatched shapes and DomainError for zero
/// matrices.
RegularReal distance(const CycloMatrix& u, const CycloMatrix& v);
RegularReal distance(const ComplexMatrix& u, const ComplexMatrix& v);
RegularReal distance(const CycloMatrix& u, const CompileTarget& target);

/// Exact squared overlap |tr(U^dagger V)|^2 / (||U||^2 ||V||^2), a real
/// cyclotomic number in [0, 1]; distance = sqrt(1 - sqrt(overlap)).
Cyclotomic overlap(const CycloMatrix& u, const CycloMatrix& v);

/// Rational upper bound on the distance from the word's matrix to the
/// target, at most eps above the true distance. Returns exactly 0 when the
/// word matches the target up to a scalar.
Rational certify(const GateSet& gates, const std::vector<std::string>& word,
                 const CompileTarget& target, const Rational& eps);
Rational certify_matrix(const CycloMatrix& u, const CompileTarget& target,
                        const Rational& eps);

}  // namespace braidgate::compiler
