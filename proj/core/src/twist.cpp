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

#include "braidgate/localsys/twist.hpp"

#include "braidgate/errors.hpp"
#include "text_util.hpp"

namespace braidgate::localsys {

TwistParams::TwistParams(int defects, int probes, int level,
                         std::vector<int> weights)
    : defects(defects), probes(probes), level(level),
      weights(std::move(weights)) {
  if (defects < 1) {
    throw DomainError("at least one defect point is required");
  }
  if (probes < 0) {
    throw DomainError("probe count must be non-negative");
  }
  if (level < 2) {
    throw DomainError("shifted level must be at least 2");
  }
  if (static_cast<int>(this->weights.size()) != defects) {
    throw DomainError("expected " + std::to_string(defects) +
                      " weights, got " +
                      std::to_string(this->weights.size()));
  }
  for (int w : this->weights) {
    if (w < 0 || w > level - 2) {
      throw DomainError("weight " + std::to_string(w) + " outside {0,...," +
                        std::to_string(level - 2) + "}");
    }
  }
}

std::string TwistParams::to_string() const {
  std::string out = "N=" + std::to_string(defects) +
                    ";n=" + std::to_string(probes) +
                    ";level=" + std::to_string(level) + ";weights=";
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(weights[k]);
  }
  return out;
}

TwistParams TwistParams::parse(std::string_view text) {
  const auto fields = detail::split(detail::trim(text), ';');
  if (fields.size() != 4) {
    throw DomainError("twist parameters must look like "
                      "'N=..;n=..;level=..;weights=..': '" +
                      std::string(text) + "'");
  }
  const int defects = detail::parse_int(detail::expect_key(fields[0], "N"), "N");
  const int probes = detail::parse_int(detail::expect_key(fields[1], "n"), "n");
  const int level =
      detail::parse_int(detail::expect_key(fields[2], "level"), "level");
  std::vector<int> weights;
  const auto list = detail::expect_key(fields[3], "weights");
  if (!list.empty()) {
    for (auto w : detail::split(list, ',')) {
      weights.push_back(detail::parse_int(w, "weights"));
    }
  }
  return TwistParams(defects, probes, level, std::move(weights));
}

TwistParams ising_preset() { return TwistParams(3, 1, 4, {1, 1, 1}); }

TwistParams fibonacci_preset() { return TwistParams(3, 1, 5, {1, 1, 1}); }

TwistParams preset(std::string_view name) {
  if (name == "ising") return ising_preset();
  if (name == "fibonacci") return fibonacci_preset();
  throw DomainError("unknown preset '" + std::string(name) + "'");
}

PhaseTable::PhaseTable(int strands) : strands_(strands) {
  if (strands < 1) {
    throw DomainError("phase tables need at least one strand");
  }
  for (int a = 1; a <= strands; ++a) {
    for (int b = a + 1; b <= strands; ++b) {
      entries_.emplace(std::make_pair(a, b), Rational(0));
    }
  }
}

const Rational& PhaseTable::exponent(int a, int b) const {
  if (a > b) std::swap(a, b);
  const auto it = entries_.find({a, b});
  if (it == entries_.end()) {
    throw DomainError("no generator (" + std::to_string(a) + "," +
                      std::to_string(b) + ") on " + std::to_string(strands_) +
                      " strands");
  }
  return it->second;
}

void PhaseTable::set(int a, int b, const Rational& exponent) {
  if (a > b) std::swap(a, b);
  const auto it = entries_.find({a, b});
  if (it == entries_.end()) {
    throw DomainError("no generator (" + std::to_string(a) + "," +
                      std::to_string(b) + ") on " + std::to_string(strands_) +
                      " strands");
  }
  it->second = exponent;
}

std::string PhaseTable::to_string() const {
  std::string out;
  for (const auto& [key, value] : entries_) {
    out += std::to_string(key.first) + "," + std::to_string(key.second) + "=" +
           value.to_string() + "\n";
  }
  return out;
}

PhaseTable PhaseTable::parse(int strands, std::string_view text) {
  PhaseTable table(strands);
  for (auto line : detail::split(text, '\n')) {
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw DomainError("phase table line must look like 'a,b=p/q': '" +
                        std::string(line) + "'");
    }
    const auto pair = detail::split(line.substr(0, eq), ',');
    if (pair.size() != 2) {
      throw DomainError("phase table line must look like 'a,b=p/q': '" +
                        std::string(line) + "'");
    }
    table.set(detail::parse_int(pair[0], "phase table"),
              detail::parse_int(pair[1], "phase table"),
              Rational::parse(line.substr(eq + 1)));
  }
  return table;
}

PhaseTable twist_table(const TwistParams& params) {
  PhaseTable table(params.strands());
  const int n_defects = params.defects;
  const Rational level(params.level);
  for (int a = 1; a <= params.strands(); ++a) {
    for (int b = a + 1; b <= params.strands(); ++b) {
      Rational exponent;
      if (b <= n_defects) {
        exponent = Rational(params.weights[static_cast<std::size_t>(a - 1)] *
                            params.weights[static_cast<std::size_t>(b - 1)]) /
                   (Rational(2) * level);
      } else if (a <= n_defects) {
        exponent =
            Rational(params.weights[static_cast<std::size_t>(a - 1)]) / level;
      } else {
        exponent = Rational(2) / level;
      }
      table.set(a, b, exponent);
    }
  }
  return table;
}

PhaseTable restrict_table(const PhaseTable& table, int strands) {
  if (strands < 1 || strands > table.strands()) {
    throw DomainError("cannot restrict a phase table on " +
                      std::to_string(table.strands()) + " strands to " +
                      std::to_string(strands));
  }
  PhaseTable out(strands);
  for (const auto& [key, value] : table.entries()) {
    if (key.second <= strands) out.set(key.first, key.second, value);
  }
  return out;
}

UnitPhase PhaseHomomorphism::operator()(const braid::PureLetter& letter) const {
  const Rational& r = table_.exponent(letter.i, letter.j);
  return UnitPhase(letter.inverted ? -r : r);
}

UnitPhase PhaseHomomorphism::operator()(const braid::PureBraidWord& w) const {
  if (w.strands() != table_.strands()) {
    throw DomainError("word on " + std::to_string(w.strands()) +
                      " strands evaluated against a table on " +
                      std::to_string(table_.strands()));
  }
  Rational sum(0);
  for (const auto& l : w.letters()) {
    const Rational& r = table_.exponent(l.i, l.j);
    sum += l.inverted ? -r : r;
  }
  return UnitPhase(sum);
}

PhaseHomomorphism phases_from_table(const PhaseTable& table) {
  return PhaseHomomorphism(table);
}

UnitPhase phase_of_word(const PhaseTable& table,
                        const braid::PureBraidWord& w) {
  return PhaseHomomorphism(table)(w);
}

}  // namespace braidgate::localsys
