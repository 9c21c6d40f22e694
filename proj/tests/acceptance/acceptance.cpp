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

// Acceptance checks. Prints one PASS or FAIL line per criterion and exits
// nonzero if any criterion fails.
//
//   braidgate_acceptance [--cli <path to braidgate>]

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "braidgate/compiler.hpp"
#include "braidgate/errors.hpp"
#include "braidgate/monodromy.hpp"
#include "braidgate/transport.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace braidgate {
namespace {

using braid::BraidWord;
using braid::PureBraidWord;
using exactnum::cyclo_identity;
using exactnum::CycloMatrix;
using exactnum::Cyclotomic;
using exactnum::Rational;
using localsys::TwistParams;
using testing::Big;
using testing::Gen;

// Tolerances and trial counts.
constexpr double kPiTolerance = 1e-8;
constexpr double kPiSeconds = 1.0;
constexpr double kWordProblemSeconds = 10.0;
constexpr double kCompileSeconds = 30.0;
constexpr int kExpPairs = 200;
constexpr int kInsertions = 200;
constexpr int kAppends = 200;
constexpr int kTwistParams = 20;
constexpr int kBurauWords = 100;
constexpr int kLawTrials = 500;
constexpr int kCertifyCalls = 100;
constexpr int kSkTargets = 20;
constexpr int kSkMaxDepth = 2;
constexpr int kSkBaseDepth = 5;
const char* const kPiReference = "3.14159265358979";
const char* const kOracleSlack = "1e-40";

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void check(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::string fixed(double x, int digits = 2) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

// Runs a shell command and returns its standard output and exit status.
std::pair<std::string, int> run_command(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return {out, -1};
  char buffer[256];
  while (fgets(buffer, sizeof buffer, pipe) != nullptr) out += buffer;
  const int status = pclose(pipe);
  return {out, status};
}

// Hadamard and T over Q(zeta_8).
compiler::GateSet clifford_t() {
  const Cyclotomic r =
      (Cyclotomic::zeta(8) + Cyclotomic::zeta(8, 7)) * Rational(1, 2);
  CycloMatrix h = cyclo_identity(2, 8);
  h(0, 0) = r;
  h(0, 1) = r;
  h(1, 0) = r;
  h(1, 1) = -r;
  CycloMatrix t = cyclo_identity(2, 8);
  t(1, 1) = Cyclotomic::zeta(8);
  return compiler::GateSet({{"H", h}, {"T", t}});
}

// diag(z^k, z^-k) times an X rotation by 2 pi m / 40, with z = zeta_40.
CycloMatrix su2_target(int k, int m) {
  CycloMatrix d = cyclo_identity(2, 40);
  d(0, 0) = Cyclotomic::zeta(40, k);
  d(1, 1) = Cyclotomic::zeta(40, -k);
  const Cyclotomic z = Cyclotomic::zeta(40, m);
  const Cyclotomic zi = Cyclotomic::zeta(40, -m);
  CycloMatrix rx = cyclo_identity(2, 40);
  rx(0, 0) = (z + zi) * Rational(1, 2);
  rx(1, 1) = rx(0, 0);
  rx(0, 1) = (zi - z) * Rational(1, 2);
  rx(1, 0) = rx(0, 1);
  return d * rx;
}

std::vector<TwistParams> sample_params() {
  return {TwistParams(2, 1, 4, {1, 1}), localsys::ising_preset(),
          localsys::fibonacci_preset(), TwistParams(4, 1, 6, {1, 2, 3, 4}),
          TwistParams(5, 1, 5, {1, 2, 3, 1, 2})};
}

Outcome pi_digits(const std::string& cli) {
  Outcome o;
  const Big machin = testing::machin_pi();
  const Big reference(kPiReference);
  const Rational eps = Rational::parse("1/10^8");

  auto start = std::chrono::steady_clock::now();
  const Rational approx = exactnum::real_approx(exactnum::pi(), eps);
  const double in_process = seconds_since(start);
  o.check(abs(testing::to_big(approx) - reference) <= Big(kPiTolerance),
          "library value " + approx.to_decimal(12) + " misses the reference");
  o.check(abs(testing::to_big(approx) - machin) <= testing::to_big(eps),
          "library value disagrees with the Machin series");
  o.check(in_process < kPiSeconds, "library took " + fixed(in_process) + " s");
  o.detail = "library " + fixed(in_process, 3) + " s";

  if (!cli.empty()) {
    start = std::chrono::steady_clock::now();
    const auto [out, status] =
        run_command("\"" + cli + "\" real pi --prec 1/10^8");
    const double elapsed = seconds_since(start);
    std::string text = out;
    while (!text.empty() && (text.back() == '\n' || text.back() == ' ')) {
      text.pop_back();
    }
    o.check(status == 0, "cli exited with status " + std::to_string(status));
    if (status == 0) {
      o.check(abs(Big(text) - reference) <= Big(kPiTolerance),
              "cli printed '" + text + "'");
    }
    o.check(elapsed < kPiSeconds, "cli took " + fixed(elapsed) + " s");
    if (o.pass) o.detail += ", cli '" + text + "' " + fixed(elapsed, 3) + " s";
  }
  return o;
}

Outcome exact_exponentials() {
  Outcome o;
  const Cyclotomic i = exactnum::exp_two_pi_i(Rational(1, 4));
  o.check(i == Cyclotomic::zeta(4), "exp(2 pi i / 4) is not zeta_4");
  o.check(i == Cyclotomic::parse("4;0,1"), "exp(2 pi i / 4) is not i");
  o.check(i * i == Cyclotomic::from_rational(4, -1), "i^2 is not -1");
  Gen gen(1002);
  for (int k = 0; k < kExpPairs; ++k) {
    const Rational a = gen.rational(40, 30);
    const Rational b = gen.rational(40, 30);
    auto [x, y] = exactnum::unify(exactnum::exp_two_pi_i(a),
                                  exactnum::exp_two_pi_i(b));
    o.check(exactnum::exp_two_pi_i(a + b) == x * y,
            "homomorphism fails at " + a.to_string() + ", " + b.to_string());
  }
  o.detail = std::to_string(kExpPairs) + " pairs";
  return o;
}

Outcome word_problem() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::size_t relator_count = 0;
  for (int n = 2; n <= 6; ++n) {
    const BraidWord e(n);
    for (const auto& r : braid::relators(n)) {
      ++relator_count;
      o.check(braid::words_equal(r, e), "Artin relator " + r.to_string());
    }
    for (const auto& r : braid::pure_relators(n)) {
      ++relator_count;
      o.check(braid::words_equal(braid::embed_pure(r), e),
              "pure relator " + r.to_string());
    }
  }
  Gen gen(1003);
  for (int k = 0; k < kInsertions; ++k) {
    const int n = gen.uniform(3, 6);
    const auto rels = braid::relators(n);
    const BraidWord w = gen.braid_word(n, 12);
    BraidWord r = rels[gen.index(rels.size())];
    if (gen.coin()) r = braid::inverse(r);
    const BraidWord v = testing::insert_at(w, gen.index(w.length() + 1), r);
    o.check(braid::words_equal(v, w), "insertion into " + w.to_string());
  }
  for (int k = 0; k < kAppends; ++k) {
    const int n = gen.uniform(2, 6);
    const BraidWord w = gen.braid_word(n, 12);
    const BraidWord v =
        braid::concat(w, BraidWord(n, {gen.artin_letter(n)}));
    o.check(!braid::words_equal(v, w), "append to " + w.to_string());
  }
  const double elapsed = seconds_since(start);
  o.check(elapsed < kWordProblemSeconds, "took " + fixed(elapsed) + " s");
  if (o.pass) {
    o.detail = std::to_string(relator_count) + " relators, " +
               std::to_string(kInsertions) + " insertions, " +
               std::to_string(kAppends) + " appends";
  }
  return o;
}

Outcome phase_relations() {
  Outcome o;
  Gen gen(1004);
  int checked = 0;
  std::size_t relator_count = 0;
  while (checked < kTwistParams) {
    const TwistParams p = gen.twist_params(6, 3);
    if (p.strands() < 3) continue;
    ++checked;
    const auto table = localsys::twist_table(p);
    for (const auto& r : braid::pure_relators(p.strands())) {
      ++relator_count;
      o.check(localsys::phase_of_word(table, r).exponent() == Rational(0),
              p.to_string() + " relator " + r.to_string());
    }
  }
  if (o.pass) {
    o.detail = std::to_string(kTwistParams) + " parameter sets, " +
               std::to_string(relator_count) + " relator images";
  }
  return o;
}

Outcome gassner_burau() {
  Outcome o;
  Gen gen(1005);
  for (int k = 0; k < kBurauWords; ++k) {
    const int n = gen.uniform(2, 5);
    const int level = gen.uniform(3, 9);
    const int weight = gen.uniform(1, level - 2);
    const TwistParams p(n, 1, level,
                        std::vector<int>(static_cast<std::size_t>(n), weight));
    const auto sys = monodromy::LocalRank1System::from_params(p);
    const Cyclotomic& t = sys.values().front();
    const PureBraidWord w = gen.pure_word(n, 8);
    o.check(monodromy::magnus_matrix(w, sys) ==
                testing::burau_product(braid::embed_pure(w), t),
            p.to_string() + " word " + w.to_string());
  }
  if (o.pass) o.detail = std::to_string(kBurauWords) + " words";
  return o;
}

Outcome representation_soundness() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& p : sample_params()) {
    const auto rep = monodromy::kz_rep(p);
    const auto cert = monodromy::verify_relations(rep);
    checks += cert.pure_checks.size();
    o.check(cert.passed(), p.to_string() + ": " + cert.report());
    o.check(cert.pure_checks.size() == braid::pure_relators(p.defects).size(),
            p.to_string() + " skipped relators");
  }
  auto rep = monodromy::kz_rep(localsys::fibonacci_preset());
  CycloMatrix bad = rep.image(1, 3);
  bad(1, 0) += Cyclotomic::one(bad(1, 0).order());
  rep.set_image(1, 3, bad);
  const auto cert = monodromy::verify_relations(rep);
  o.check(!cert.passed(), "corrupted generator was not caught");
  bool threw = false;
  try {
    cert.require();
  } catch (const CertificateError&) {
    threw = true;
  }
  o.check(threw, "require() accepted a corrupted representation");
  if (o.pass) {
    o.detail = std::to_string(checks) + " relator checks, corruption caught (" +
               std::to_string(cert.failures().size()) + " failures)";
  }
  return o;
}

Outcome reduced_full_twist() {
  Outcome o;
  const auto phi = monodromy::braid_to_automorphism(BraidWord(2, {1, 1}));
  const PureBraidWord twist = PureBraidWord::parse("strands=2;+(1,2)");
  std::vector<TwistParams> params{TwistParams(2, 1, 4, {1, 1}),
                                  TwistParams(2, 0, 5, {1, 3}),
                                  TwistParams(2, 0, 7, {2, 5})};
  for (int level = 3; level <= 9; ++level) {
    for (int a = 1; a <= level - 2; ++a) {
      params.emplace_back(2, 0, level, std::vector<int>{a, level - 2});
    }
  }
  int checked = 0;
  for (const auto& p : params) {
    const auto sys = monodromy::LocalRank1System::from_params(p);
    if (sys.all_trivial()) continue;
    const int order = sys.field_order();
    CycloMatrix jac = exactnum::cyclo_zero(2, 2, order);
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t i = 0; i < 2; ++i) {
        jac(j, i) = monodromy::fox_derivative(phi.image(static_cast<int>(j) + 1),
                                              static_cast<int>(i) + 1)
                        .evaluate(sys.values());
      }
    }
    // The boundary line has eigenvalue 1, so the quotient eigenvalue is
    // trace - 1, and it must also equal the determinant.
    const Cyclotomic oracle = exactnum::trace(jac) - Cyclotomic::one(order);
    o.check(oracle == exactnum::det_2x2(jac),
            p.to_string() + ": Fox Jacobian trace and determinant disagree");
    const CycloMatrix r = monodromy::reduced_magnus_matrix(twist, sys);
    o.check(r.rows() == 1 && r(0, 0) == oracle,
            p.to_string() + ": reduced action differs from the Fox scalar");
    ++checked;
  }
  if (o.pass) o.detail = std::to_string(checked) + " local systems";
  return o;
}

Outcome transport_laws() {
  Outcome o;
  std::vector<transport::CohomologyFamily> families;
  for (const auto& p : sample_params()) {
    families.push_back(transport::family_from_params(p));
  }
  Gen gen(1008);
  for (int k = 0; k < kLawTrials; ++k) {
    const auto& f = families[gen.index(families.size())];
    const PureBraidWord u = gen.pure_word(f.strands(), 8);
    const PureBraidWord v = gen.pure_word(f.strands(), 8);
    o.check(transport::transport(f, braid::concat(u, v)).matrix ==
                transport::transport(f, u).matrix *
                    transport::transport(f, v).matrix,
            "functoriality for " + u.to_string() + " . " + v.to_string());
  }
  for (int k = 0; k < kLawTrials; ++k) {
    const auto& f = families[gen.index(families.size())];
    const PureBraidWord u = gen.pure_word(f.strands(), 10);
    const CycloMatrix id = cyclo_identity(f.fiber_dim(), f.field_order());
    o.check(transport::transport(f, braid::concat(u, braid::inverse(u)))
                    .matrix == id,
            "inverse law for " + u.to_string());
    o.check(transport::transport(f, braid::inverse(u)).matrix *
                    transport::transport(f, u).matrix ==
                id,
            "inverse law for " + u.to_string());
  }
  for (int k = 0; k < kLawTrials; ++k) {
    // Relators need at least three strands.
    const auto& f = families[1 + gen.index(families.size() - 1)];
    const auto rels = braid::pure_relators(f.strands());
    const PureBraidWord w = gen.pure_word(f.strands(), 8);
    PureBraidWord r = rels[gen.index(rels.size())];
    if (gen.coin()) r = braid::inverse(r);
    const PureBraidWord v = testing::insert_at(w, gen.index(w.length() + 1), r);
    o.check(braid::words_equal(v, w), "words_equal rejects an insertion");
    o.check(transport::transport(f, v).matrix ==
                transport::transport(f, w).matrix,
            "relator insertion changes " + w.to_string());
  }
  if (o.pass) o.detail = std::to_string(kLawTrials) + " trials per law";
  return o;
}

Outcome compiler_optimality() {
  Outcome o;
  const auto fib = transport::family_from_params(localsys::fibonacci_preset());
  const auto ising = transport::family_from_params(localsys::ising_preset());
  const std::vector<compiler::GateSet> sets{
      compiler::gate_set_from_family(fib, {{1, 2}, {2, 3}}),
      compiler::gate_set_from_family(ising, {{1, 3}, {2, 3}}),
      compiler::gate_set_from_family(fib, {{1, 3}}), clifford_t()};
  const Rational eps = Rational::parse("1/10^30");
  constexpr std::size_t kMaxLen = 6;
  Gen gen(1009);
  double slowest = 0;
  int instances = 0;
  for (const auto& g : sets) {
    for (int trial = 0; trial < 2; ++trial) {
      const CycloMatrix target = gen.cyclo_matrix(2, 2, g.field_order());
      if (exactnum::frobenius_sq(target).is_zero()) continue;
      const compiler::CompileTarget t(target);
      const auto expect = testing::naive_compile(g, target, kMaxLen);
      std::vector<compiler::CompileResult> results;
      for (unsigned workers : {1u, 2u, 8u}) {
        const auto start = std::chrono::steady_clock::now();
        results.push_back(
            compiler::brute_force_compile(g, t, kMaxLen, eps, {workers, true}));
        slowest = std::max(slowest, seconds_since(start));
      }
      ++instances;
      o.check(results[0].word == expect.word,
              "brute force picked '" + compiler::format_labels(results[0].word) +
                  "', exhaustive search picked '" +
                  compiler::format_labels(expect.word) + "'");
      for (const auto& r : results) {
        o.check(r.word == results[0].word &&
                    r.certified_error == results[0].certified_error &&
                    r.stats.nodes == results[0].stats.nodes,
                "worker counts disagree");
      }
    }
  }
  o.check(slowest < kCompileSeconds, "slowest instance " + fixed(slowest) + " s");
  if (o.pass) {
    o.detail = std::to_string(instances) + " instances, slowest " +
               fixed(slowest, 3) + " s";
  }
  return o;
}

Outcome certificate_soundness() {
  Outcome o;
  Gen gen(1010);
  const compiler::GateSet ht = clifford_t();
  const auto fib = transport::family_from_params(localsys::fibonacci_preset());
  const compiler::GateSet fg = compiler::gate_set_from_family(fib);
  const Big slack(kOracleSlack);
  for (int k = 0; k < kCertifyCalls; ++k) {
    const bool use_ht = k % 2 == 0;
    const compiler::GateSet& g = use_ht ? ht : fg;
    std::vector<std::string> word(gen.index(13));
    for (auto& l : word) l = g.gate(gen.index(g.size())).label;
    const CycloMatrix target = use_ht
                                   ? su2_target(gen.uniform(0, 39),
                                                gen.uniform(0, 39))
                                   : gen.cyclo_matrix(2, 2, 10);
    if (exactnum::frobenius_sq(target).is_zero()) {
      --k;
      continue;
    }
    const compiler::CompileTarget t(target);
    const Rational eps =
        Rational::parse("1/2^" + std::to_string(gen.uniform(3, 60)));
    const Rational bound = compiler::certify(g, word, t, eps);
    // Re-evaluate with four times finer precision than certify uses.
    const Rational fine_eps = eps / Rational(8);
    const Rational fine =
        exactnum::real_approx(compiler::distance(g.evaluate(word), t), fine_eps);
    o.check(bound >= fine - fine_eps,
            "bound " + bound.to_decimal(12) + " below re-evaluation " +
                fine.to_decimal(12));
    const Big exact = testing::big_distance(testing::to_big(g.evaluate(word)),
                                            testing::to_big(target));
    o.check(testing::to_big(bound) >= exact - slack,
            "bound below the 50-digit distance");
    o.check(testing::to_big(bound) <= exact + testing::to_big(eps),
            "bound looser than the tolerance");
  }
  int improved = 0;
  for (int k = 0; k < kSkTargets; ++k) {
    const int a = gen.uniform(0, 39);
    const int b = gen.uniform(0, 39);
    const compiler::CompileTarget t(su2_target(a, b));
    Rational previous(2);
    for (int depth = 0; depth <= kSkMaxDepth; ++depth) {
      const auto r = compiler::solovay_kitaev(
          ht, t, {kSkBaseDepth, depth, Rational(1, 1000000), 1});
      o.check(r.certified_error <= previous,
              "SK error rose at depth " + std::to_string(depth) + " on target " +
                  std::to_string(a) + "," + std::to_string(b));
      if (depth > 0 && r.certified_error < previous) ++improved;
      previous = r.certified_error;
    }
  }
  if (o.pass) {
    o.detail = std::to_string(kCertifyCalls) + " certify calls, " +
               std::to_string(kSkTargets) + " SK targets (" +
               std::to_string(improved) + " strict improvements)";
  }
  return o;
}

}  // namespace
}  // namespace braidgate

int main(int argc, char** argv) {
  std::string cli;
  for (int k = 1; k < argc; ++k) {
    const std::string arg = argv[k];
    if (arg == "--cli" && k + 1 < argc) {
      cli = argv[++k];
    } else {
      std::cerr << "usage: " << argv[0] << " [--cli <path>]\n";
      return 2;
    }
  }

  using namespace braidgate;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"pi to 1e-8", [&] { return pi_digits(cli); }},
      {"exact exponentials", exact_exponentials},
      {"braid word problem", word_problem},
      {"phase homomorphism relations", phase_relations},
      {"Gassner against Burau", gassner_burau},
      {"representation soundness", representation_soundness},
      {"reduced full twist", reduced_full_twist},
      {"transport laws", transport_laws},
      {"compiler optimality and determinism", compiler_optimality},
      {"certificate soundness", certificate_soundness},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(start);
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (k + 1) << " "
              << criteria[k].first << " [" << fixed(elapsed) << " s] "
              << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
