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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidgate/braid/words.hpp"
#include "braidgate/exactnum/matrix.hpp"
#include "braidgate/localsys/twist.hpp"
#include "braidgate/monodromy/gassner.hpp"

namespace braidgate::monodromy {

/// Outcome of evaluating one relator through a representation.
struct RelatorCheck {
  std::size_t index = 0;
  std::string relator;
  bool passed = false;
  /// Empty on success; otherwise the offending product matrix.
  std::string detail;
};

struct RelationCertificate {
  int strands = 0;
  std::vector<RelatorCheck> pure_checks;
  std::vector<RelatorCheck> artin_checks;

  bool passed() const;
  std::vector<RelatorCheck> failures() const;
  /// Human-readable report naming every failing relator.
  std::string report() const;
  /// FNV-1a digest of the relator list and outcomes.
  std::uint64_t digest() const;
  /// Throws CertificateError with the report unless every check passed.
  void require() const;
};

/// Linear representation of the pure braid group on a fiber, given by
/// generator images. Optionally also carries images of the Artin
/// generators, which is only meaningful when every puncture carries the same
/// phase.
class MonodromyRep {
 public:
  MonodromyRep() = default;
  MonodromyRep(int strands, LocalRank1System system, std::size_t dimension,
               std::map<std::pair<int, int>, CycloMatrix> pure_images,
               std::map<int, CycloMatrix> artin_images = {});

  int strands() const { return strands_; }
  const LocalRank1System& system() const { return system_; }
  std::size_t dimension() const { return dimension_; }
  int field_order() const { return system_.field_order(); }
  bool has_artin_images() const { return !artin_images_.empty(); }

  const std::map<std::pair<int, int>, CycloMatrix>& pure_images() const {
    return pure_images_;
  }
  const std::map<int, CycloMatrix>& artin_images() const {
    return artin_images_;
  }

  const CycloMatrix& image(int i, int j) const;
  CycloMatrix image(const braid::PureLetter& letter) const;
  /// Product of letter images in word order; identity for the empty word.
  CycloMatrix image(const braid::PureBraidWord& w) const;
  CycloMatrix image(const braid::BraidWord& w) const;

  /// Replaces one generator image; used to build negative controls.
  void set_image(int i, int j, const CycloMatrix& m);

  std::string to_string() const;
  static MonodromyRep parse(std::string_view text);

 private:
  void require_compatible(const CycloMatrix& m, const std::string& what) const;

  int strands_ = 1;
  LocalRank1System system_;
  std::size_t dimension_ = 0;
  std::map<std::pair<int, int>, CycloMatrix> pure_images_;
  std::map<std::pair<int, int>, CycloMatrix> pure_inverses_;
  std::map<int, CycloMatrix> artin_images_;
  std::map<int, CycloMatrix> artin_inverses_;
};

/// Colored Gassner representation on C^1, or on the reduced fiber. Artin
/// images are included when all phases agree.
MonodromyRep gassner_rep(const LocalRank1System& sys, bool reduced = false);

/// Classical Burau representation: every puncture carries t.
MonodromyRep burau_rep(int strands, const UnitPhase& t, bool reduced = false,
                       int field_order = 0);

/// Degree-one conformal block monodromy: the defect-defect twist phase of
/// the word times the reduced Gassner matrix at t_I = exp(2 pi i w_I/kappa).
/// Throws UnsupportedError unless params has exactly one probe.
CycloMatrix kz_monodromy(const localsys::TwistParams& params,
                         const braid::PureBraidWord& w);

/// Representation whose generator images are kz_monodromy of b_ij.
MonodromyRep kz_rep(const localsys::TwistParams& params);

/// Evaluates every pure relator (and every Artin relator when Artin images
/// are present) and compares with the identity exactly. Work is split across
/// `workers` threads; results are reported in relator order.
RelationCertificate verify_relations(const MonodromyRep& rep,
                                     unsigned workers = 1);

}  // namespace braidgate::monodromy
