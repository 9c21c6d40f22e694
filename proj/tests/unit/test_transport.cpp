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

#include <catch2/catch_amalgamated.hpp>
#include <filesystem>

#include "braidgate/errors.hpp"
#include "braidgate/transport.hpp"
#include "generators.hpp"

namespace braidgate::transport {
namespace {

using braid::PureBraidWord;
using exactnum::cyclo_identity;
using localsys::TwistParams;
using testing::Gen;
using testing::insert_at;

const std::vector<TwistParams>& sample_params() {
  static const std::vector<TwistParams> params{
      TwistParams(2, 1, 4, {1, 1}), localsys::ising_preset(),
      localsys::fibonacci_preset(), TwistParams(4, 1, 6, {1, 2, 3, 4}),
      TwistParams(5, 1, 5, {1, 2, 3, 1, 2})};
  return params;
}

const std::vector<CohomologyFamily>& sample_families() {
  static const std::vector<CohomologyFamily> families = [] {
    std::vector<CohomologyFamily> out;
    for (const auto& p : sample_params()) out.push_back(family_from_params(p));
    return out;
  }();
  return families;
}

SCENARIO("Building families") {
  GIVEN("Two defects at level 4") {
    const CohomologyFamily f = family_from_params(TwistParams(2, 1, 4, {1, 1}));
    REQUIRE(f.fiber_dim() == 1);
    REQUIRE(f.rep().pure_images().size() == 1);
    REQUIRE(f.certificate().passed());
  }
  GIVEN("Three Fibonacci defects") {
    const CohomologyFamily f = family_from_params(localsys::fibonacci_preset());
    REQUIRE(f.fiber_dim() == 2);
    REQUIRE(f.field_order() == 10);
    REQUIRE(f.certificate().pure_checks.size() == 2);
  }
  GIVEN("A single defect") {
    const CohomologyFamily f = family_from_params(TwistParams(1, 1, 5, {2}));
    REQUIRE(f.fiber_dim() == 0);
    REQUIRE(f.rep().pure_images().empty());
    REQUIRE(transport(f, PureBraidWord(1)).matrix.rows() == 0);
  }
  GIVEN("Unsupported probe counts") {
    REQUIRE_THROWS_AS(family_from_params(TwistParams(2, 2, 4, {1, 1})),
                      UnsupportedError);
    REQUIRE_THROWS_AS(family_from_params(TwistParams(2, 0, 4, {1, 1})),
                      UnsupportedError);
  }
  GIVEN("A representation that breaks a relator") {
    monodromy::MonodromyRep rep = monodromy::kz_rep(localsys::ising_preset());
    auto bad = rep.image(1, 3);
    bad(1, 0) += exactnum::Cyclotomic::one(8);
    rep.set_image(1, 3, bad);
    REQUIRE_THROWS_AS(CohomologyFamily(localsys::ising_preset(), rep),
                      CertificateError);
  }
}

SCENARIO("Transport of single words") {
  const CohomologyFamily two = family_from_params(TwistParams(2, 1, 4, {1, 1}));
  REQUIRE(transport(two, PureBraidWord(2)).matrix == cyclo_identity(1, 8));
  const TransportResult one =
      transport(two, PureBraidWord::parse("strands=2;+(1,2)"));
  REQUIRE(one.matrix == two.rep().image(1, 2));
  REQUIRE(one.provenance.size() == 1);
  REQUIRE_THROWS_AS(transport(two, PureBraidWord(3)), DomainError);
  GIVEN("Relators") {
    for (const auto& f : sample_families()) {
      for (const auto& r : braid::pure_relators(f.strands())) {
        REQUIRE(transport(f, r).matrix ==
                cyclo_identity(f.fiber_dim(), f.field_order()));
      }
    }
  }
  GIVEN("Provenance records the partial products") {
    Gen gen(401);
    const CohomologyFamily& f = sample_families()[2];
    for (int k = 0; k < 20; ++k) {
      const PureBraidWord w = gen.pure_word(3, 8);
      const TransportResult r = transport(f, w);
      REQUIRE(r.provenance.size() == w.length());
      exactnum::CycloMatrix acc = cyclo_identity(2, 10);
      for (std::size_t s = 0; s < w.length(); ++s) {
        acc = acc * f.rep().image(w.letters()[s]);
        REQUIRE(r.provenance[s].letter == w.letters()[s]);
        REQUIRE(r.provenance[s].partial == acc);
      }
      REQUIRE(r.matrix == acc);
    }
  }
}

SCENARIO("Transport laws") {
  GIVEN("Trivial words") {
    for (const auto& f : sample_families()) {
      const PureBraidWord e(f.strands());
      REQUIRE(transport_laws(f, e, e).ok());
    }
  }
  GIVEN("Random pairs") {
    Gen gen(402);
    for (int k = 0; k < 500; ++k) {
      const CohomologyFamily& f =
          sample_families()[gen.index(sample_families().size())];
      const PureBraidWord u = gen.pure_word(f.strands(), 8);
      const PureBraidWord v = gen.pure_word(f.strands(), 8);
      const TransportLawReport report = transport_laws(f, u, v);
      INFO(report.detail);
      REQUIRE(report.ok());
      REQUIRE(transport(f, braid::concat(u, v)).matrix ==
              transport(f, u).matrix * transport(f, v).matrix);
      REQUIRE(transport(f, braid::concat(u, braid::inverse(u))).matrix ==
              cyclo_identity(f.fiber_dim(), f.field_order()));
    }
  }
  GIVEN("Relator insertion") {
    Gen gen(403);
    for (int k = 0; k < 200; ++k) {
      const CohomologyFamily& f =
          sample_families()[1 + gen.index(sample_families().size() - 1)];
      const auto rels = braid::pure_relators(f.strands());
      const PureBraidWord w = gen.pure_word(f.strands(), 8);
      PureBraidWord r = rels[gen.index(rels.size())];
      if (gen.coin()) r = braid::inverse(r);
      const PureBraidWord v = insert_at(w, gen.index(w.length() + 1), r);
      REQUIRE(braid::words_equal(v, w));
      REQUIRE(transport(f, v).matrix == transport(f, w).matrix);
    }
  }
}

SCENARIO("Deterministic batches") {
  Gen gen(404);
  const CohomologyFamily& f = sample_families()[4];
  std::vector<PureBraidWord> words;
  for (int k = 0; k < 40; ++k) words.push_back(gen.pure_word(5, 8));
  const auto serial = transport_batch(f, words, 1);
  REQUIRE(serial.size() == words.size());
  for (unsigned workers : {2u, 8u}) {
    const auto parallel = transport_batch(f, words, workers);
    REQUIRE(parallel.size() == serial.size());
    for (std::size_t k = 0; k < serial.size(); ++k) {
      REQUIRE(parallel[k].to_string() == serial[k].to_string());
    }
  }
  for (std::size_t k = 0; k < words.size(); ++k) {
    REQUIRE(serial[k].to_string() == transport(f, words[k]).to_string());
  }
}

SCENARIO("Family files") {
  const CohomologyFamily& f = sample_families()[1];
  GIVEN("A round trip through text") {
    const CohomologyFamily back = CohomologyFamily::parse(f.to_string());
    REQUIRE(back.params() == f.params());
    REQUIRE(back.to_string() == f.to_string());
    REQUIRE(back.certificate().digest() == f.certificate().digest());
  }
  GIVEN("A round trip through a file") {
    const auto path =
        (std::filesystem::temp_directory_path() / "braidgate_unit_family.bg")
            .string();
    write_family(f, path);
    REQUIRE(read_family(path).to_string() == f.to_string());
    std::filesystem::remove(path);
    REQUIRE_THROWS_AS(read_family(path), DomainError);
  }
  GIVEN("A tampered digest") {
    std::string text = f.to_string();
    const auto pos = text.rfind(' ');
    text[pos + 1] = text[pos + 1] == '0' ? '1' : '0';
    REQUIRE_THROWS_AS(CohomologyFamily::parse(text), CertificateError);
  }
  GIVEN("A tampered matrix") {
    monodromy::MonodromyRep rep = f.rep();
    auto bad = rep.image(2, 3);
    bad(0, 0) += exactnum::Cyclotomic::one(8);
    rep.set_image(2, 3, bad);
    std::string text = f.to_string();
    const std::string good_rep = f.rep().to_string();
    text.replace(text.find(good_rep), good_rep.size(), rep.to_string());
    REQUIRE_THROWS_AS(CohomologyFamily::parse(text), CertificateError);
  }
  GIVEN("Malformed text") {
    REQUIRE_THROWS_AS(CohomologyFamily::parse("braidgate-family 2\n"),
                      DomainError);
    REQUIRE_THROWS_AS(CohomologyFamily::parse(""), DomainError);
  }
}

}  // namespace
}  // namespace braidgate::transport
