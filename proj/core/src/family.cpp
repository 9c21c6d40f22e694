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

#include "braidgate/transport/family.hpp"

#include <fstream>
#include <sstream>
#include <thread>

#include "braidgate/errors.hpp"
#include "text_util.hpp"

namespace braidgate::transport {

namespace {

constexpr std::string_view kMagic = "braidgate-family 1";

}  // namespace

CohomologyFamily::CohomologyFamily(localsys::TwistParams params,
                                   monodromy::MonodromyRep rep,
                                   unsigned workers)
    : params_(std::move(params)), rep_(std::move(rep)) {
  if (rep_.strands() != params_.defects) {
    throw DomainError("representation on " + std::to_string(rep_.strands()) +
                      " strands for " + std::to_string(params_.defects) +
                      " defects");
  }
  cert_ = monodromy::verify_relations(rep_, workers);
  cert_.require();
}

std::string CohomologyFamily::to_string() const {
  return std::string(kMagic) + "\nparams " + params_.to_string() + "\n" +
         rep_.to_string() + "certificate " +
         std::to_string(cert_.pure_checks.size() + cert_.artin_checks.size()) +
         " " + detail::hex64(cert_.digest()) + "\n";
}

CohomologyFamily CohomologyFamily::parse(std::string_view text,
                                         unsigned workers) {
  const auto lines = detail::lines(text);
  if (lines.size() < 4 || detail::trim(lines[0]) != kMagic) {
    throw DomainError("not a family file (missing '" + std::string(kMagic) +
                      "' header)");
  }
  const std::string_view params_line = detail::trim(lines[1]);
  if (params_line.substr(0, 7) != "params ") {
    throw DomainError("family file: expected a 'params' line");
  }
  auto params = localsys::TwistParams::parse(params_line.substr(7));

  std::size_t cert_line = lines.size();
  while (cert_line > 2 && detail::trim(lines[cert_line - 1]).empty()) {
    --cert_line;
  }
  --cert_line;
  const auto cert_fields = detail::split(detail::trim(lines[cert_line]), ' ');
  if (cert_fields.size() != 3 || cert_fields[0] != "certificate") {
    throw DomainError("family file: expected a trailing 'certificate' line");
  }
  std::string rep_text;
  for (std::size_t k = 2; k < cert_line; ++k) rep_text += lines[k] + "\n";
  auto rep = monodromy::MonodromyRep::parse(rep_text);

  CohomologyFamily family(std::move(params), std::move(rep), workers);
  const auto& cert = family.certificate();
  const std::string count =
      std::to_string(cert.pure_checks.size() + cert.artin_checks.size());
  if (cert_fields[1] != count ||
      cert_fields[2] != detail::hex64(cert.digest())) {
    throw CertificateError("family file certificate mismatch: stored " +
                           std::string(cert_fields[1]) + " " +
                           std::string(cert_fields[2]) + ", recomputed " +
                           count + " " + detail::hex64(cert.digest()));
  }
  return family;
}

CohomologyFamily family_from_params(const localsys::TwistParams& params,
                                    unsigned workers) {
  return CohomologyFamily(params, monodromy::kz_rep(params), workers);
}

CohomologyFamily read_family(const std::string& path, unsigned workers) {
  std::ifstream in(path);
  if (!in) {
    throw DomainError("cannot open family file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return CohomologyFamily::parse(buf.str(), workers);
}

void write_family(const CohomologyFamily& family, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw DomainError("cannot write family file '" + path + "'");
  }
  out << family.to_string();
}

std::string TransportResult::to_string() const {
  std::string out = "word " + word.to_string() + "\nmatrix\n" +
                    exactnum::format_rows(matrix);
  for (std::size_t k = 0; k < provenance.size(); ++k) {
    const auto& s = provenance[k];
    out += "step " + std::to_string(k + 1) + " " +
           (s.letter.inverted ? "-" : "+") + "(" + std::to_string(s.letter.i) +
           "," + std::to_string(s.letter.j) + ")\n" +
           exactnum::format_rows(s.partial);
  }
  return out;
}

TransportResult transport(const CohomologyFamily& family,
                          const braid::PureBraidWord& w) {
  const auto& rep = family.rep();
  if (w.strands() != rep.strands()) {
    throw DomainError("word on " + std::to_string(w.strands()) +
                      " strands for a family over " +
                      std::to_string(rep.strands()) + " strands");
  }
  TransportResult r;
  r.word = w;
  r.matrix = exactnum::cyclo_identity(rep.dimension(), rep.field_order());
  for (const auto& l : w.letters()) {
    r.matrix = r.matrix * rep.image(l);
    r.provenance.push_back({l, r.matrix});
  }
  return r;
}

std::vector<TransportResult> transport_batch(
    const CohomologyFamily& family,
    const std::vector<braid::PureBraidWord>& words, unsigned workers) {
  std::vector<TransportResult> out(words.size());
  auto run = [&](std::size_t begin, std::size_t step) {
    for (std::size_t k = begin; k < words.size(); k += step) {
      out[k] = transport(family, words[k]);
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

TransportLawReport transport_laws(const CohomologyFamily& family,
                                  const braid::PureBraidWord& u,
                                  const braid::PureBraidWord& v) {
  TransportLawReport report;
  const CycloMatrix tu = transport(family, u).matrix;
  const CycloMatrix tv = transport(family, v).matrix;
  const CycloMatrix tuv = transport(family, braid::concat(u, v)).matrix;
  const CycloMatrix tu_inv = transport(family, braid::inverse(u)).matrix;
  report.functorial = tuv == tu * tv;
  report.inverse =
      exactnum::is_identity(tu_inv * tu) && exactnum::is_identity(tu * tu_inv);
  if (!report.functorial) {
    report.detail += "T(uv) != T(u)T(v) for u = " + u.to_string() +
                     ", v = " + v.to_string() + "\n";
  }
  if (!report.inverse) {
    report.detail += "T(u^-1) is not inverse to T(u) for u = " +
                     u.to_string() + "\n";
  }
  return report;
}

}  // namespace braidgate::transport
