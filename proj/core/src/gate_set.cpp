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

#include "braidgate/compiler/gate_set.hpp"

#include <numeric>
#include <set>

#include "braidgate/errors.hpp"

namespace braidgate::compiler {

namespace {

constexpr std::string_view kInverseSuffix = "^-1";

bool ends_with_inverse(const std::string& label) {
  return label.size() >= kInverseSuffix.size() &&
         label.compare(label.size() - kInverseSuffix.size(),
                       kInverseSuffix.size(), kInverseSuffix) == 0;
}

}  // namespace

GateSet::GateSet(std::vector<std::pair<std::string, CycloMatrix>> generators,
                 std::string source)
    : source_(std::move(source)) {
  if (generators.empty()) {
    throw DomainError("a gate set needs at least one generator");
  }
  dimension_ = generators.front().second.rows();
  if (dimension_ == 0) {
    throw DimensionError("gates must act on a nonzero fiber");
  }
  field_order_ = 1;
  for (const auto& [label, m] : generators) {
    if (m.rows() != dimension_ || m.cols() != dimension_) {
      throw DimensionError("gate '" + label + "' has shape " + m.shape() +
                           ", expected " + std::to_string(dimension_) + "x" +
                           std::to_string(dimension_));
    }
    field_order_ = std::lcm(field_order_, exactnum::matrix_order(m));
  }
  std::set<std::string> seen;
  const std::size_t count = generators.size();
  gates_.resize(2 * count);
  for (std::size_t k = 0; k < count; ++k) {
    auto& [label, m] = generators[k];
    if (label.empty() || ends_with_inverse(label) ||
        label.find_first_of(" \t\n,;") != std::string::npos) {
      throw DomainError("invalid gate label '" + label + "'");
    }
    CycloMatrix embedded = exactnum::embed(m, field_order_);
    CycloMatrix inv = exactnum::inverse(embedded);
    gates_[k] = {label, std::move(embedded), count + k};
    gates_[count + k] = {label + std::string(kInverseSuffix), std::move(inv),
                         k};
  }
  for (const auto& g : gates_) {
    if (!seen.insert(g.label).second) {
      throw DomainError("duplicate gate label '" + g.label + "'");
    }
  }
}

std::size_t GateSet::index_of(const std::string& label) const {
  for (std::size_t k = 0; k < gates_.size(); ++k) {
    if (gates_[k].label == label) return k;
  }
  throw DomainError("unknown gate label '" + label + "'");
}

std::vector<std::size_t> GateSet::indices(
    const std::vector<std::string>& word) const {
  std::vector<std::size_t> out;
  out.reserve(word.size());
  for (const auto& l : word) out.push_back(index_of(l));
  return out;
}

std::vector<std::string> GateSet::labels(
    const std::vector<std::size_t>& word) const {
  std::vector<std::string> out;
  out.reserve(word.size());
  for (auto k : word) out.push_back(gates_.at(k).label);
  return out;
}

CycloMatrix GateSet::evaluate(const std::vector<std::string>& word) const {
  return evaluate_indices(indices(word));
}

CycloMatrix GateSet::evaluate_indices(
    const std::vector<std::size_t>& word) const {
  CycloMatrix m = exactnum::cyclo_identity(dimension_, field_order_);
  for (auto k : word) m = m * gates_.at(k).matrix;
  return m;
}

std::vector<std::string> GateSet::inverse_word(
    const std::vector<std::string>& word) const {
  std::vector<std::string> out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    out.push_back(gates_[gates_[index_of(*it)].inverse].label);
  }
  return out;
}

std::string generator_label(int i, int j) {
  return "b" + std::to_string(i) + "_" + std::to_string(j);
}

GateSet gate_set_from_family(const transport::CohomologyFamily& family,
                             const std::vector<std::pair<int, int>>& subset) {
  if (subset.empty()) {
    throw DomainError("choose at least one generator for the gate set");
  }
  if (family.fiber_dim() == 0) {
    throw DomainError("the family has a zero-dimensional fiber");
  }
  std::vector<std::pair<std::string, CycloMatrix>> gens;
  for (auto [i, j] : subset) {
    if (i > j) std::swap(i, j);
    gens.emplace_back(generator_label(i, j), family.rep().image(i, j));
  }
  return GateSet(std::move(gens), family.params().to_string());
}

GateSet gate_set_from_family(const transport::CohomologyFamily& family) {
  std::vector<std::pair<int, int>> all;
  for (const auto& [key, m] : family.rep().pure_images()) all.push_back(key);
  return gate_set_from_family(family, all);
}

std::vector<std::pair<std::string, Cyclotomic>> unitarity_defects(
    const GateSet& gates) {
  std::vector<std::pair<std::string, Cyclotomic>> out;
  const CycloMatrix id =
      exactnum::cyclo_identity(gates.dimension(), gates.field_order());
  for (const auto& g : gates.gates()) {
    if (ends_with_inverse(g.label)) continue;
    out.emplace_back(g.label,
                     exactnum::frobenius_sq(adjoint(g.matrix) * g.matrix - id));
  }
  return out;
}

std::vector<std::string> parse_labels(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',') {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

std::string format_labels(const std::vector<std::string>& word) {
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += ' ';
    out += word[k];
  }
  return out;
}

}  // namespace braidgate::compiler
