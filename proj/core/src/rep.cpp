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

#include "braidgate/monodromy/rep.hpp"

#include <thread>

#include "braidgate/braid/relators.hpp"
#include "braidgate/errors.hpp"
#include "text_util.hpp"

namespace braidgate::monodromy {

bool RelationCertificate::passed() const {
  for (const auto& c : pure_checks) {
    if (!c.passed) return false;
  }
  for (const auto& c : artin_checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::vector<RelatorCheck> RelationCertificate::failures() const {
  std::vector<RelatorCheck> out;
  for (const auto& c : pure_checks) {
    if (!c.passed) out.push_back(c);
  }
  for (const auto& c : artin_checks) {
    if (!c.passed) out.push_back(c);
  }
  return out;
}

std::string RelationCertificate::report() const {
  const auto failed = failures();
  std::string out = std::to_string(pure_checks.size()) + " pure and " +
                    std::to_string(artin_checks.size()) +
                    " Artin relators checked on " + std::to_string(strands) +
                    " strands; " + std::to_string(failed.size()) +
                    " failed\n";
  for (const auto& c : failed) {
    out += "relator #" + std::to_string(c.index) + " " + c.relator +
           " evaluates to\n" + c.detail;
  }
  return out;
}

std::uint64_t RelationCertificate::digest() const {
  std::uint64_t h = detail::fnv1a("strands=" + std::to_string(strands));
  for (const auto* checks : {&pure_checks, &artin_checks}) {
    for (const auto& c : *checks) {
      h = detail::fnv1a(c.relator, h);
      h = detail::fnv1a(c.passed ? "+" : "-", h);
    }
  }
  return h;
}

void RelationCertificate::require() const {
  if (!passed()) throw CertificateError(report());
}

MonodromyRep::MonodromyRep(
    int strands, LocalRank1System system, std::size_t dimension,
    std::map<std::pair<int, int>, CycloMatrix> pure_images,
    std::map<int, CycloMatrix> artin_images)
    : strands_(strands),
      system_(std::move(system)),
      dimension_(dimension),
      pure_images_(std::move(pure_images)),
      artin_images_(std::move(artin_images)) {
  if (strands_ != system_.punctures()) {
    throw DomainError("representation on " + std::to_string(strands_) +
                      " strands with a local system on " +
                      std::to_string(system_.punctures()) + " punctures");
  }
  for (int i = 1; i <= strands_; ++i) {
    for (int j = i + 1; j <= strands_; ++j) {
      const auto it = pure_images_.find({i, j});
      if (it == pure_images_.end()) {
        throw DomainError("missing image of generator (" + std::to_string(i) +
                          "," + std::to_string(j) + ")");
      }
      require_compatible(it->second, "generator image");
    }
  }
  if (pure_images_.size() !=
      static_cast<std::size_t>(strands_ * (strands_ - 1) / 2)) {
    throw DomainError("generator images outside the admissible pairs");
  }
  for (const auto& [key, m] : pure_images_) {
    pure_inverses_.emplace(key, exactnum::inverse(m));
  }
  for (const auto& [i, m] : artin_images_) {
    if (i < 1 || i >= strands_) {
      throw DomainError("Artin generator index " + std::to_string(i) +
                        " out of range");
    }
    require_compatible(m, "Artin image");
    artin_inverses_.emplace(i, exactnum::inverse(m));
  }
  if (!artin_images_.empty() &&
      artin_images_.size() != static_cast<std::size_t>(strands_ - 1)) {
    throw DomainError("Artin images must cover every generator");
  }
}

void MonodromyRep::require_compatible(const CycloMatrix& m,
                                      const std::string& what) const {
  if (m.rows() != dimension_ || m.cols() != dimension_) {
    throw DimensionError(what + " has shape " + m.shape() + "; fiber has " +
                         "dimension " + std::to_string(dimension_));
  }
  if (dimension_ > 0 && exactnum::matrix_order(m) != field_order()) {
    throw DimensionError(what + " lives in the wrong cyclotomic field");
  }
}

const CycloMatrix& MonodromyRep::image(int i, int j) const {
  if (i > j) std::swap(i, j);
  const auto it = pure_images_.find({i, j});
  if (it == pure_images_.end()) {
    throw DomainError("no generator (" + std::to_string(i) + "," +
                      std::to_string(j) + ")");
  }
  return it->second;
}

CycloMatrix MonodromyRep::image(const braid::PureLetter& letter) const {
  if (letter.inverted) {
    const auto it = pure_inverses_.find({letter.i, letter.j});
    if (it == pure_inverses_.end()) {
      throw DomainError("no generator (" + std::to_string(letter.i) + "," +
                        std::to_string(letter.j) + ")");
    }
    return it->second;
  }
  return image(letter.i, letter.j);
}

CycloMatrix MonodromyRep::image(const braid::PureBraidWord& w) const {
  if (w.strands() != strands_) {
    throw DomainError("word on " + std::to_string(w.strands()) +
                      " strands for a representation on " +
                      std::to_string(strands_));
  }
  CycloMatrix m = exactnum::cyclo_identity(dimension_, field_order());
  for (const auto& l : w.letters()) {
    m = m * (l.inverted ? pure_inverses_.at({l.i, l.j})
                        : pure_images_.at({l.i, l.j}));
  }
  return m;
}

CycloMatrix MonodromyRep::image(const braid::BraidWord& w) const {
  if (w.strands() != strands_) {
    throw DomainError("word on " + std::to_string(w.strands()) +
                      " strands for a representation on " +
                      std::to_string(strands_));
  }
  if (artin_images_.empty() && !w.empty()) {
    throw UnsupportedError(
        "representation has no Artin generator images; use pure words");
  }
  CycloMatrix m = exactnum::cyclo_identity(dimension_, field_order());
  for (int l : w.letters()) {
    m = m * (l > 0 ? artin_images_.at(l) : artin_inverses_.at(-l));
  }
  return m;
}

void MonodromyRep::set_image(int i, int j, const CycloMatrix& m) {
  if (i > j) std::swap(i, j);
  auto it = pure_images_.find({i, j});
  if (it == pure_images_.end()) {
    throw DomainError("no generator (" + std::to_string(i) + "," +
                      std::to_string(j) + ")");
  }
  require_compatible(m, "generator image");
  pure_inverses_.at({i, j}) = exactnum::inverse(m);
  it->second = m;
}

std::string MonodromyRep::to_string() const {
  std::string out = "strands=" + std::to_string(strands_) +
                    ";order=" + std::to_string(field_order()) +
                    ";fiber_dim=" + std::to_string(dimension_) + ";t=";
  for (std::size_t k = 0; k < system_.phases().size(); ++k) {
    if (k) out += ',';
    out += system_.phases()[k].to_string();
  }
  out += '\n';
  for (const auto& [key, m] : pure_images_) {
    out += "b " + std::to_string(key.first) + "," +
           std::to_string(key.second) + "\n" + exactnum::format_rows(m);
  }
  for (const auto& [i, m] : artin_images_) {
    out += "s " + std::to_string(i) + "\n" + exactnum::format_rows(m);
  }
  return out;
}

MonodromyRep MonodromyRep::parse(std::string_view text) {
  const auto lines = detail::lines(text);
  if (lines.empty()) {
    throw DomainError("empty representation text");
  }
  const auto header = detail::split(lines[0], ';');
  if (header.size() != 4) {
    throw DomainError("representation header must look like "
                      "'strands=..;order=..;fiber_dim=..;t=..'");
  }
  const int strands =
      detail::parse_int(detail::expect_key(header[0], "strands"), "strands");
  const int order =
      detail::parse_int(detail::expect_key(header[1], "order"), "order");
  const int dim = detail::parse_int(
      detail::expect_key(header[2], "fiber_dim"), "fiber_dim");
  if (dim < 0) {
    throw DomainError("negative fiber dimension");
  }
  std::vector<UnitPhase> t;
  for (auto part : detail::split(detail::expect_key(header[3], "t"), ',')) {
    t.emplace_back(Rational::parse(part));
  }
  LocalRank1System sys(std::move(t), order);
  const auto d = static_cast<std::size_t>(dim);

  std::map<std::pair<int, int>, CycloMatrix> pure;
  std::map<int, CycloMatrix> artin;
  std::size_t pos = 1;
  while (pos < lines.size()) {
    const std::string_view tag = detail::trim(lines[pos]);
    if (tag.empty()) {
      ++pos;
      continue;
    }
    if (pos + d >= lines.size()) {
      throw DomainError("truncated matrix block after '" + std::string(tag) +
                        "'");
    }
    std::vector<std::string> rows(lines.begin() + static_cast<long>(pos + 1),
                                  lines.begin() + static_cast<long>(pos + 1 + d));
    CycloMatrix m = exactnum::parse_rows(order, d, d, rows);
    if (tag.substr(0, 2) == "b ") {
      const auto ij = detail::split(tag.substr(2), ',');
      if (ij.size() != 2) {
        throw DomainError("bad generator tag '" + std::string(tag) + "'");
      }
      pure.emplace(std::make_pair(detail::parse_int(ij[0], "generator"),
                                  detail::parse_int(ij[1], "generator")),
                   std::move(m));
    } else if (tag.substr(0, 2) == "s ") {
      artin.emplace(detail::parse_int(tag.substr(2), "Artin generator"),
                    std::move(m));
    } else {
      throw DomainError("unexpected line '" + std::string(tag) + "'");
    }
    pos += 1 + d;
  }
  return MonodromyRep(strands, std::move(sys), d, std::move(pure),
                      std::move(artin));
}

namespace {

bool all_equal(const LocalRank1System& sys) {
  for (const auto& p : sys.phases()) {
    if (!(p == sys.phases().front())) return false;
  }
  return true;
}

}  // namespace

MonodromyRep gassner_rep(const LocalRank1System& sys, bool reduced) {
  const int n = sys.punctures();
  std::optional<ReducedFiber> fiber;
  if (reduced) fiber = reduced_fiber(sys);
  auto finish = [&](const CycloMatrix& m) {
    return fiber ? fiber->reduce(m) : m;
  };
  std::map<std::pair<int, int>, CycloMatrix> pure;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      pure.emplace(std::make_pair(i, j),
                   finish(magnus_matrix(
                       braid::PureBraidWord(n, {{i, j, false}}), sys)));
    }
  }
  std::map<int, CycloMatrix> artin;
  if (all_equal(sys)) {
    for (int i = 1; i < n; ++i) {
      artin.emplace(i, finish(magnus_matrix(braid::BraidWord(n, {i}), sys)));
    }
  }
  const std::size_t dim =
      fiber ? fiber->dimension : static_cast<std::size_t>(n);
  return MonodromyRep(n, sys, dim, std::move(pure), std::move(artin));
}

MonodromyRep burau_rep(int strands, const UnitPhase& t, bool reduced,
                       int field_order) {
  return gassner_rep(LocalRank1System::uniform(strands, t, field_order),
                     reduced);
}

namespace {

void require_degree_one(const localsys::TwistParams& params) {
  if (params.probes != 1) {
    throw UnsupportedError(
        "monodromy is implemented for exactly one probe; got n = " +
        std::to_string(params.probes) +
        " (multi-probe conformal blocks, n >= 2, are out of scope)");
  }
}

}  // namespace

CycloMatrix kz_monodromy(const localsys::TwistParams& params,
                         const braid::PureBraidWord& w) {
  require_degree_one(params);
  if (w.strands() != params.defects) {
    throw DomainError("word on " + std::to_string(w.strands()) +
                      " strands; the family has " +
                      std::to_string(params.defects) + " defects");
  }
  const auto sys = LocalRank1System::from_params(params);
  const auto table =
      localsys::restrict_table(localsys::twist_table(params), params.defects);
  const auto phase = localsys::phase_of_word(table, w);
  return phase.to_cyclotomic(sys.field_order()) *
         reduced_magnus_matrix(w, sys);
}

MonodromyRep kz_rep(const localsys::TwistParams& params) {
  require_degree_one(params);
  const int n = params.defects;
  const auto sys = LocalRank1System::from_params(params);
  const auto fiber = reduced_fiber(sys);
  const auto table =
      localsys::restrict_table(localsys::twist_table(params), n);
  std::map<std::pair<int, int>, CycloMatrix> pure;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const braid::PureBraidWord gen(n, {{i, j, false}});
      const Cyclotomic scalar =
          UnitPhase(table.exponent(i, j)).to_cyclotomic(sys.field_order());
      pure.emplace(std::make_pair(i, j),
                   scalar * fiber.reduce(magnus_matrix(gen, sys)));
    }
  }
  return MonodromyRep(n, sys, fiber.dimension, std::move(pure));
}

namespace {

template <typename Word>
std::vector<RelatorCheck> check_all(const MonodromyRep& rep,
                                    const std::vector<Word>& words,
                                    unsigned workers) {
  std::vector<RelatorCheck> out(words.size());
  auto run = [&](std::size_t begin, std::size_t step) {
    for (std::size_t k = begin; k < words.size(); k += step) {
      const CycloMatrix m = rep.image(words[k]);
      RelatorCheck& c = out[k];
      c.index = k;
      c.relator = words[k].to_string();
      c.passed = exactnum::is_identity(m);
      if (!c.passed) c.detail = exactnum::format_rows(m);
    }
  };
  if (workers <= 1 || words.size() < 2) {
    run(0, 1);
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w, workers);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace

RelationCertificate verify_relations(const MonodromyRep& rep,
                                     unsigned workers) {
  RelationCertificate cert;
  cert.strands = rep.strands();
  // A single strand has a trivial braid group and no relators.
  if (rep.strands() < 2) return cert;
  cert.pure_checks =
      check_all(rep, braid::pure_relators(rep.strands()), workers);
  if (rep.has_artin_images()) {
    cert.artin_checks =
        check_all(rep, braid::relators(rep.strands()), workers);
  }
  return cert;
}

}  // namespace braidgate::monodromy
