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

// Command line front end. Exit codes: 0 success, 2 invalid input or
// unsupported request, 3 failed certificate.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "braidgate/braid.hpp"
#include "braidgate/compiler.hpp"
#include "braidgate/errors.hpp"
#include "braidgate/exactnum.hpp"
#include "braidgate/localsys.hpp"
#include "braidgate/monodromy.hpp"
#include "braidgate/transport.hpp"

namespace {

using namespace braidgate;
using exactnum::Rational;

constexpr int kDomainExit = 2;
constexpr int kCertificateExit = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::pair<int, int>> parse_generator_list(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const auto comma = item.find(',');
    if (comma == std::string::npos) {
      throw DomainError("generator list entries look like 'i,j': '" + item +
                        "'");
    }
    out.emplace_back(std::stoi(item.substr(0, comma)),
                     std::stoi(item.substr(comma + 1)));
  }
  return out;
}

void print_search(const compiler::CompileResult& r) {
  std::cout << "word: "
            << (r.word.empty() ? std::string("(empty)")
                               : compiler::format_labels(r.word))
            << "\nlength: " << r.word.size()
            << "\ncertified_error: " << r.certified_error.to_string()
            << " (~" << r.certified_error.to_decimal(10) << ")"
            << "\nnodes: " << r.stats.nodes << "\ndepth: " << r.stats.depth
            << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braidgate: exact braid monodromy and certified compilation"};
  app.require_subcommand(1);

  // braid
  auto* braid_cmd = app.add_subcommand("braid", "Braid word utilities");
  braid_cmd->require_subcommand(1);
  int strands = 0;
  std::string word_text;
  std::string word2_text;
  auto add_word_opts = [&](CLI::App* sub) {
    sub->add_option("--strands", strands, "Number of strands")->required();
    sub->add_option("--word", word_text, "Letters, e.g. \"1,2,-1\"")
        ->required();
  };
  auto* normalize_cmd =
      braid_cmd->add_subcommand("normalize", "Garside normal form");
  add_word_opts(normalize_cmd);
  auto* perm_cmd = braid_cmd->add_subcommand("perm", "Induced permutation");
  add_word_opts(perm_cmd);
  auto* equal_cmd =
      braid_cmd->add_subcommand("equal", "Decide equality of two braids");
  add_word_opts(equal_cmd);
  equal_cmd->add_option("--word2", word2_text, "Second word")->required();

  // phase
  auto* phase_cmd = app.add_subcommand("phase", "Twist phase of a pure word");
  std::string params_text;
  std::string pure_word_text;
  phase_cmd->add_option("--params", params_text, "N=..;n=..;level=..;weights=..")
      ->required();
  phase_cmd->add_option("--pure-word", pure_word_text, "e.g. \"+(1,2);-(2,3)\"")
      ->required();

  // rep
  auto* rep_cmd = app.add_subcommand("rep", "Build or verify families");
  rep_cmd->require_subcommand(1);
  std::string out_path;
  std::string family_path;
  unsigned workers = 1;
  auto* build_cmd = rep_cmd->add_subcommand("build", "Build a family file");
  build_cmd
      ->add_option("--params", params_text,
                   "N=..;n=..;level=..;weights=.. or a preset name "
                   "(ising, fibonacci)")
      ->required();
  build_cmd->add_option("--out", out_path)->required();
  build_cmd->add_option("--workers", workers);
  auto* verify_rep_cmd =
      rep_cmd->add_subcommand("verify", "Re-check a family file");
  verify_rep_cmd->add_option("family", family_path)->required();
  verify_rep_cmd->add_option("--workers", workers);

  // transport
  auto* transport_cmd =
      app.add_subcommand("transport", "Transport along a pure word");
  transport_cmd->add_option("--family", family_path)->required();
  transport_cmd->add_option("--pure-word", pure_word_text)->required();

  // compile
  auto* compile_cmd = app.add_subcommand("compile", "Compile a target");
  std::string target_path;
  std::string gates_text;
  std::size_t max_len = 6;
  std::string eps_text = "1/1000";
  int sk_depth = -1;
  bool no_prune = false;
  compile_cmd->add_option("--family", family_path)->required();
  compile_cmd->add_option("--target", target_path)->required();
  compile_cmd->add_option("--max-len", max_len,
                          "Brute-force length (base net depth with SK)");
  compile_cmd->add_option("--eps", eps_text, "Certification tolerance");
  compile_cmd->add_option("--sk-depth", sk_depth, "Solovay-Kitaev depth");
  compile_cmd->add_option("--gates", gates_text,
                          "Generators to use, e.g. \"1,2;2,3\" (default all)");
  compile_cmd->add_option("--workers", workers);
  compile_cmd->add_flag("--no-prune", no_prune,
                        "Also enumerate words that are not freely reduced");

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "Certify a word against a target");
  std::string labels_path;
  std::string precision_text;
  verify_cmd->add_option("--family", family_path)->required();
  verify_cmd->add_option("--word", labels_path, "File with gate labels")
      ->required();
  verify_cmd->add_option("--target", target_path)->required();
  verify_cmd->add_option("--eps", eps_text, "Required accuracy");
  verify_cmd->add_option("--precision", precision_text,
                         "Certification precision (default eps/100)");
  verify_cmd->add_option("--gates", gates_text);

  // real
  auto* real_cmd = app.add_subcommand("real", "Exact real constants");
  real_cmd->require_subcommand(1);
  auto* pi_cmd = real_cmd->add_subcommand("pi", "Print pi");
  std::string prec_text = "1/100000000";
  pi_cmd->add_option("--prec", prec_text, "Absolute tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kDomainExit;
  }

  try {
    if (*normalize_cmd) {
      const auto w = braid::BraidWord::parse(strands, word_text);
      std::cout << braid::garside_normal_form(w).to_string() << "\n";
    } else if (*perm_cmd) {
      const auto w = braid::BraidWord::parse(strands, word_text);
      std::cout << braid::perm(w).to_string() << "\n";
    } else if (*equal_cmd) {
      const auto u = braid::BraidWord::parse(strands, word_text);
      const auto v = braid::BraidWord::parse(strands, word2_text);
      std::cout << (braid::words_equal(u, v) ? "true" : "false") << "\n";
    } else if (*phase_cmd) {
      const auto params = localsys::TwistParams::parse(params_text);
      const auto w =
          braid::PureBraidWord::parse(params.strands(), pure_word_text);
      const auto phase =
          localsys::phase_of_word(localsys::twist_table(params), w);
      std::cout << "exponent: " << phase.to_string() << "\nphase: "
                << phase.to_cyclotomic().to_string() << "\n";
    } else if (*build_cmd) {
      const auto params = params_text.find('=') == std::string::npos
                              ? localsys::preset(params_text)
                              : localsys::TwistParams::parse(params_text);
      const auto family = transport::family_from_params(params, workers);
      transport::write_family(family, out_path);
      std::cout << "fiber_dim: " << family.fiber_dim()
                << "\nrelators: " << family.certificate().pure_checks.size()
                << " passed\nwrote " << out_path << "\n";
    } else if (*verify_rep_cmd) {
      const auto family = transport::read_family(family_path, workers);
      std::cout << family.certificate().report();
    } else if (*transport_cmd) {
      const auto family = transport::read_family(family_path);
      const auto w =
          braid::PureBraidWord::parse(family.strands(), pure_word_text);
      const auto r = transport::transport(family, w);
      std::cout << "fiber_dim=" << family.fiber_dim()
                << ";order=" << family.field_order() << "\n"
                << exactnum::format_rows(r.matrix);
    } else if (*compile_cmd) {
      const auto family = transport::read_family(family_path);
      const auto gates =
          gates_text.empty()
              ? compiler::gate_set_from_family(family)
              : compiler::gate_set_from_family(
                    family, parse_generator_list(gates_text));
      const auto target = compiler::read_target(target_path);
      const Rational eps = Rational::parse(eps_text);
      if (sk_depth >= 0) {
        compiler::SKParams p;
        p.base_net_depth = static_cast<int>(max_len);
        p.recursion_depth = sk_depth;
        p.certify_eps = eps;
        p.workers = workers;
        print_search(compiler::solovay_kitaev(gates, target, p));
      } else {
        print_search(compiler::brute_force_compile(
            gates, target, max_len, eps, {workers, !no_prune}));
      }
    } else if (*verify_cmd) {
      const auto family = transport::read_family(family_path);
      const auto gates =
          gates_text.empty()
              ? compiler::gate_set_from_family(family)
              : compiler::gate_set_from_family(
                    family, parse_generator_list(gates_text));
      const auto target = compiler::read_target(target_path);
      const auto word = compiler::parse_labels(read_file(labels_path));
      const Rational eps = Rational::parse(eps_text);
      const Rational precision = precision_text.empty()
                                     ? eps / Rational(100)
                                     : Rational::parse(precision_text);
      const Rational bound = compiler::certify(gates, word, target, precision);
      std::cout << "certified_error: " << bound.to_string() << " (~"
                << bound.to_decimal(10) << ")\n";
      if (bound > eps) {
        throw CertificateError("certified error " + bound.to_decimal(10) +
                               " exceeds " + eps.to_string());
      }
      std::cout << "ok\n";
    } else if (*pi_cmd) {
      const Rational eps = Rational::parse(prec_text);
      std::cout << exactnum::to_decimal(exactnum::pi(), eps) << "\n";
    }
  } catch (const CertificateError& e) {
    std::cerr << "certificate failure: " << e.what() << "\n";
    return kCertificateExit;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainExit;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainExit;
  }
  return 0;
}
