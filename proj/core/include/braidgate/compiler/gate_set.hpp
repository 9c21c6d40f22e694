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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidgate/braid/words.hpp"
#include "braidgate/exactnum/matrix.hpp"
#include "braidgate/transport/family.hpp"

namespace braidgate::compiler {

using exactnum::CycloMatrix;
using exactnum::Cyclotomic;
using exactnum::Rational;

struct Gate {
  std::string label;
  CycloMatrix matrix;
  /// Index of the inverse gate within the same set.
  std::size_t inverse = 0;
};

/// Finite set of invertible gates closed under inversion. Each generator
/// "g" is accompanied by its exact inverse "g^-1".
class GateSet {
 public:
  GateSet() = default;
  explicit GateSet(std::vector<std::pair<std::string, CycloMatrix>> generators,
                   std::string source = {});

  std::size_t dimension() const { return dimension_; }
  int field_order() const { return field_order_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  const std::vector<Gate>& gates() const { return gates_; }
  const Gate& gate(std::size_t k) const { return gates_[k]; }
  const std::string& source() const { return source_; }

  /// Throws DomainError for unknown labels.
  std::size_t index_of(const std::string& label) const;
  std::vector<std::size_t> indices(const std::vector<std::string>& word) const;
  std::vector<std::string> labels(const std::vector<std::size_t>& word) const;

  /// Exact product of the gates in word order; identity for the empty word.
  CycloMatrix evaluate(const std::vector<std::string>& word) const;
  CycloMatrix evaluate_indices(const std::vector<std::size_t>& word) const;

  std::vector<std::string> inverse_word(
      const std::vector<std::string>& word) const;

 private:
  std::size_t dimension_ = 0;
  int field_order_ = 1;
  std::vector<Gate> gates_;
  std::string source_;
};

/// Label of the pure generator b_ij in family gate sets: "b<i>_<j>".
std::string generator_label(int i, int j);

/// Gate set made of the transports of the chosen pure generators.
GateSet gate_set_from_family(const transport::CohomologyFamily& family,
                             const std::vector<std::pair<int, int>>& subset);
/// All generators b_ij of the family.
GateSet gate_set_from_family(const transport::CohomologyFamily& family);

/// ||U^dagger U - 1||_F^2 for every generator, computed exactly. All zero
/// means the gate set is unitary in the standard inner product.
std::vector<std::pair<std::string, Cyclotomic>> unitarity_defects(
    const GateSet& gates);

/// Parses a label list separated by whitespace or commas.
std::vector<std::string> parse_labels(std::string_view text);
std::string format_labels(const std::vector<std::string>& word);

}  // namespace braidgate::compiler
