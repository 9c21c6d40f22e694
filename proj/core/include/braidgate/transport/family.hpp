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
#include <vector>

#include "braidgate/braid/words.hpp"
#include "braidgate/exactnum/matrix.hpp"
#include "braidgate/localsys/twist.hpp"
#include "braidgate/monodromy/rep.hpp"

namespace braidgate::transport {

using exactnum::CycloMatrix;

/// Family of reduced twisted cohomology fibers over the pure braid group on
/// the defect strands, presented by generators and Lee relators. The action
/// is checked against every relator when the family is built or loaded.
class CohomologyFamily {
 public:
  /// Verifies `rep` against all relators; throws CertificateError with the
  /// failing relators otherwise.
  CohomologyFamily(localsys::TwistParams params, monodromy::MonodromyRep rep,
                   unsigned workers = 1);

  const localsys::TwistParams& params() const { return params_; }
  const monodromy::MonodromyRep& rep() const { return rep_; }
  const monodromy::RelationCertificate& certificate() const { return cert_; }
  int strands() const { return rep_.strands(); }
  std::size_t fiber_dim() const { return rep_.dimension(); }
  int field_order() const { return rep_.field_order(); }

  /// File format: a "braidgate-family 1" line, a "params ..." line, the
  /// representation text, then "certificate <relators> <digest>".
  std::string to_string() const;
  /// Re-verifies the relators and compares the stored digest.
  static CohomologyFamily parse(std::string_view text, unsigned workers = 1);

 private:
  localsys::TwistParams params_;
  monodromy::MonodromyRep rep_;
  monodromy::RelationCertificate cert_;
};

/// Degree-one family: throws UnsupportedError unless params has one probe.
CohomologyFamily family_from_params(const localsys::TwistParams& params,
                                    unsigned workers = 1);

CohomologyFamily read_family(const std::string& path, unsigned workers = 1);
void write_family(const CohomologyFamily& family, const std::string& path);

struct TransportStep {
  braid::PureLetter letter;
  /// Product of the generator images up to and including this step.
  CycloMatrix partial;
};

struct TransportResult {
  braid::PureBraidWord word;
  CycloMatrix matrix;
  std::vector<TransportStep> provenance;

  std::string to_string() const;
};

/// Product of the generator images in word order.
TransportResult transport(const CohomologyFamily& family,
                          const braid::PureBraidWord& w);

/// Transports each word; results are in input order for any worker count.
std::vector<TransportResult> transport_batch(
    const CohomologyFamily& family,
    const std::vector<braid::PureBraidWord>& words, unsigned workers = 1);

struct TransportLawReport {
  /// T(u v) == T(u) T(v).
  bool functorial = false;
  /// T(u^-1) T(u) == 1 and T(u) T(u^-1) == 1.
  bool inverse = false;
  std::string detail;

  bool ok() const { return functorial && inverse; }
};

TransportLawReport transport_laws(const CohomologyFamily& family,
                                  const braid::PureBraidWord& u,
                                  const braid::PureBraidWord& v);

}  // namespace braidgate::transport
