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

#include "braidgate/compiler/target.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "braidgate/errors.hpp"
#include "text_util.hpp"

namespace braidgate::compiler {

CompileTarget::CompileTarget(CycloMatrix m)
    : dimension_(m.rows()), matrix_(std::move(m)) {
  cyclotomic().require_square();
}

CompileTarget::CompileTarget(ComplexMatrix m)
    : dimension_(m.rows()), matrix_(std::move(m)) {
  complex().require_square();
}

ComplexMatrix CompileTarget::as_complex() const {
  return is_cyclotomic() ? exactnum::to_complex(cyclotomic()) : complex();
}

std::string CompileTarget::to_string() const {
  std::string out = "d=" + std::to_string(dimension_) + ";field=";
  if (is_cyclotomic()) {
    out += "cyclo:" + std::to_string(exactnum::matrix_order(cyclotomic())) +
           "\n" + exactnum::format_rows(cyclotomic());
    return out;
  }
  out += "complex\n";
  const auto& m = complex();
  for (std::size_t i = 0; i < dimension_; ++i) {
    for (std::size_t j = 0; j < dimension_; ++j) {
      const auto& e = m(i, j);
      if (!e.re.exact_value() || !e.im.exact_value()) {
        throw UnsupportedError(
            "only targets with rational complex entries can be written");
      }
      if (j) out += ';';
      out += e.re.exact_value()->to_string() + "," +
             e.im.exact_value()->to_string();
    }
    out += '\n';
  }
  return out;
}

CompileTarget CompileTarget::parse(std::string_view text) {
  auto lines = detail::lines(text);
  while (!lines.empty() && detail::trim(lines.back()).empty()) {
    lines.pop_back();
  }
  if (lines.empty()) {
    throw DomainError("empty matrix file");
  }
  const auto header = detail::split(lines[0], ';');
  if (header.size() != 2) {
    throw DomainError("matrix header must look like "
                      "'d=K;field=cyclo:L' or 'd=K;field=complex'");
  }
  const int d = detail::parse_int(detail::expect_key(header[0], "d"), "d");
  if (d < 1) {
    throw DomainError("matrix dimension must be positive");
  }
  const auto dim = static_cast<std::size_t>(d);
  const std::string_view field = detail::expect_key(header[1], "field");
  std::vector<std::string> rows(lines.begin() + 1, lines.end());
  if (field.substr(0, 6) == "cyclo:") {
    const int order = detail::parse_int(field.substr(6), "field order");
    if (order < 1) {
      throw DomainError("cyclotomic order must be positive");
    }
    return CompileTarget(exactnum::parse_rows(order, dim, dim, rows));
  }
  if (field != "complex") {
    throw DomainError("unknown field '" + std::string(field) + "'");
  }
  if (rows.size() != dim) {
    throw DomainError("expected " + std::to_string(dim) +
                      " matrix rows, got " + std::to_string(rows.size()));
  }
  ComplexMatrix m(dim, dim, exactnum::ExactComplex());
  for (std::size_t i = 0; i < dim; ++i) {
    const auto entries = detail::split(rows[i], ';');
    if (entries.size() != dim) {
      throw DomainError("row " + std::to_string(i + 1) + " has " +
                        std::to_string(entries.size()) + " entries");
    }
    for (std::size_t j = 0; j < dim; ++j) {
      const auto parts = detail::split(entries[j], ',');
      if (parts.size() != 2) {
        throw DomainError("complex entry must look like 're,im': '" +
                          std::string(entries[j]) + "'");
      }
      m(i, j) = exactnum::ExactComplex(Rational::parse(parts[0]),
                                       Rational::parse(parts[1]));
    }
  }
  return CompileTarget(std::move(m));
}

CompileTarget read_target(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw DomainError("cannot open matrix file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return CompileTarget::parse(buf.str());
}

void write_target(const CompileTarget& target, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw DomainError("cannot write matrix file '" + path + "'");
  }
  out << target.to_string();
}

namespace {

void require_comparable(std::size_t ur, std::size_t uc, std::size_t vr,
                        std::size_t vc) {
  if (ur != uc || vr != vc || ur != vr || ur == 0) {
    throw DimensionError("distance between " + std::to_string(ur) + "x" +
                         std::to_string(uc) + " and " + std::to_string(vr) +
                         "x" + std::to_string(vc) + " matrices");
  }
}

RegularReal distance_from_overlap(const RegularReal& r) {
  return exactnum::real_sqrt(RegularReal(Rational(1)) - exactnum::real_sqrt(r));
}

}  // namespace

Cyclotomic overlap(const CycloMatrix& u, const CycloMatrix& v) {
  require_comparable(u.rows(), u.cols(), v.rows(), v.cols());
  const int order =
      std::lcm(exactnum::matrix_order(u), exactnum::matrix_order(v));
  const CycloMatrix a = exactnum::embed(u, order);
  const CycloMatrix b = exactnum::embed(v, order);
  Cyclotomic t = Cyclotomic::zero(order);
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    t += a.entries()[k].conj() * b.entries()[k];
  }
  const Cyclotomic fa = exactnum::frobenius_sq(a);
  const Cyclotomic fb = exactnum::frobenius_sq(b);
  if (fa.is_zero() || fb.is_zero()) {
    throw DomainError("distance to the zero matrix is undefined");
  }
  return t * t.conj() * (fa * fb).inverse();
}

RegularReal distance(const CycloMatrix& u, const CycloMatrix& v) {
  const Cyclotomic r = overlap(u, v);
  if (r == Cyclotomic::one(r.order())) {
    return RegularReal(Rational(0));
  }
  return distance_from_overlap(exactnum::cyclo_to_complex(r).re);
}

RegularReal distance(const ComplexMatrix& u, const ComplexMatrix& v) {
  require_comparable(u.rows(), u.cols(), v.rows(), v.cols());
  exactnum::ExactComplex t;
  for (std::size_t k = 0; k < u.entries().size(); ++k) {
    t = t + conj(u.entries()[k]) * v.entries()[k];
  }
  const RegularReal fu = exactnum::frobenius_sq(u);
  const RegularReal fv = exactnum::frobenius_sq(v);
  return distance_from_overlap(exactnum::abs_sq(t) *
                               exactnum::real_inv(fu * fv));
}

RegularReal distance(const CycloMatrix& u, const CompileTarget& target) {
  if (target.is_cyclotomic()) return distance(u, target.cyclotomic());
  return distance(exactnum::to_complex(u), target.complex());
}

Rational certify_matrix(const CycloMatrix& u, const CompileTarget& target,
                        const Rational& eps) {
  if (eps.sign() <= 0) {
    throw DomainError("certification tolerance must be positive");
  }
  if (u.rows() != target.dimension()) {
    throw DimensionError("word acts on dimension " + std::to_string(u.rows()) +
                         ", target has dimension " +
                         std::to_string(target.dimension()));
  }
  const RegularReal d = distance(u, target);
  if (d.exact_value()) return *d.exact_value();
  const Rational half = eps / Rational(2);
  Rational bound = exactnum::real_approx(d, half) + half;
  if (bound > Rational(1)) bound = Rational(1);
  return bound;
}

Rational certify(const GateSet& gates, const std::vector<std::string>& word,
                 const CompileTarget& target, const Rational& eps) {
  return certify_matrix(gates.evaluate(word), target, eps);
}

}  // namespace braidgate::compiler
