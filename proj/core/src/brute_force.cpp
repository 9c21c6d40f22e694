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

#include <algorithm>
#include <numeric>
#include <optional>
#include <thread>

#include "braidgate/compiler/search.hpp"
#include "braidgate/errors.hpp"
#include "numeric.hpp"

namespace braidgate::compiler {

namespace {

// Overlaps closer than this are compared exactly. Double-precision products
// of the word lengths searched here are accurate to far better than this.
constexpr double kScreenMargin = 1e-8;

// Complex targets cannot be compared exactly; beyond this precision two
// overlaps are treated as equal and the earlier word is kept.
const Rational kComplexTieTolerance(exactnum::Integer(1),
                                    exactnum::Integer(1) << 200);

struct ExactKey {
  // Cyclotomic targets: overlap = num / den, both real and den > 0.
  Cyclotomic num;
  Cyclotomic den;
  // Complex targets.
  std::optional<RegularReal> overlap;
};

class Scorer {
 public:
  Scorer(const GateSet& gates, const CompileTarget& target)
      : gates_(gates), target_(target) {
    if (target.dimension() != gates.dimension()) {
      throw DimensionError("target has dimension " +
                           std::to_string(target.dimension()) +
                           ", gates act on dimension " +
                           std::to_string(gates.dimension()));
    }
    numeric_target_ = target.is_cyclotomic()
                          ? detail::to_numeric(target.cyclotomic())
                          : detail::to_numeric(target.complex());
    for (const auto& g : gates.gates()) {
      numeric_gates_.push_back(detail::to_numeric(g.matrix));
    }
    if (target.is_cyclotomic()) {
      order_ = std::lcm(gates.field_order(),
                        exactnum::matrix_order(target.cyclotomic()));
      exact_target_ = exactnum::embed(target.cyclotomic(), order_);
    }
  }

  const detail::NumMatrix& numeric_gate(std::size_t k) const {
    return numeric_gates_[k];
  }
  double screen(const detail::NumMatrix& u) const {
    return detail::overlap(u, numeric_target_);
  }

  ExactKey exact(const std::vector<std::size_t>& word) const {
    const CycloMatrix u = gates_.evaluate_indices(word);
    ExactKey key;
    if (target_.is_cyclotomic()) {
      const CycloMatrix a = exactnum::embed(u, order_);
      Cyclotomic t = Cyclotomic::zero(order_);
      for (std::size_t k = 0; k < a.entries().size(); ++k) {
        t += a.entries()[k].conj() * exact_target_.entries()[k];
      }
      key.num = t * t.conj();
      key.den = exactnum::frobenius_sq(a);
    } else {
      const auto cu = exactnum::to_complex(u);
      exactnum::ExactComplex t;
      for (std::size_t k = 0; k < cu.entries().size(); ++k) {
        t = t + conj(cu.entries()[k]) * target_.complex().entries()[k];
      }
      key.overlap = exactnum::abs_sq(t) *
                    exactnum::real_inv(exactnum::frobenius_sq(cu));
    }
    return key;
  }

  /// +1 when a is strictly closer to the target than b, -1 when farther.
  int compare(const ExactKey& a, const ExactKey& b) const {
    if (!a.overlap) {
      return exactnum::real_part_sign(a.num * b.den - b.num * a.den);
    }
    return exactnum::real_compare(*a.overlap, *b.overlap, kComplexTieTolerance)
        .value_or(0);
  }

  Rational certify(const std::vector<std::size_t>& word,
                   const Rational& eps) const {
    return certify_matrix(gates_.evaluate_indices(word), target_, eps);
  }

 private:
  const GateSet& gates_;
  const CompileTarget& target_;
  detail::NumMatrix numeric_target_;
  std::vector<detail::NumMatrix> numeric_gates_;
  int order_ = 1;
  CycloMatrix exact_target_;
};

struct Candidate {
  std::vector<std::size_t> word;
  std::vector<std::string> labels;
  double screen = 0.0;
  std::optional<ExactKey> key;
};

const ExactKey& key_of(const Scorer& scorer, Candidate& c) {
  if (!c.key) c.key = scorer.exact(c.word);
  return *c.key;
}

/// True when a is strictly closer than b.
bool closer(const Scorer& scorer, Candidate& a, Candidate& b,
            std::uint64_t& exact_count) {
  if (a.screen > b.screen + kScreenMargin) return true;
  if (a.screen < b.screen - kScreenMargin) return false;
  ++exact_count;
  return scorer.compare(key_of(scorer, a), key_of(scorer, b)) > 0;
}

struct LevelResult {
  std::optional<Candidate> best;
  std::uint64_t nodes = 0;
  std::uint64_t exact = 0;
};

class LevelSearch {
 public:
  LevelSearch(const GateSet& gates, const Scorer& scorer,
              std::vector<std::size_t> order, bool prune, std::size_t length)
      : gates_(gates),
        scorer_(scorer),
        order_(std::move(order)),
        prune_(prune),
        length_(length) {}

  LevelResult run(const std::vector<std::size_t>& first_letters) {
    word_.clear();
    stack_.assign(1, detail::NumMatrix::identity(gates_.dimension()));
    for (auto g : first_letters) extend(g);
    return std::move(result_);
  }

 private:
  void extend(std::size_t g) {
    word_.push_back(g);
    stack_.push_back(stack_.back() * scorer_.numeric_gate(g));
    ++result_.nodes;
    if (word_.size() == length_) {
      visit();
    } else {
      for (auto next : order_) {
        if (prune_ && gates_.gate(g).inverse == next) continue;
        extend(next);
      }
    }
    stack_.pop_back();
    word_.pop_back();
  }

  void visit() {
    Candidate c;
    c.word = word_;
    c.screen = scorer_.screen(stack_.back());
    if (!result_.best || closer(scorer_, c, *result_.best, result_.exact)) {
      c.labels = gates_.labels(c.word);
      result_.best = std::move(c);
    }
  }

  const GateSet& gates_;
  const Scorer& scorer_;
  std::vector<std::size_t> order_;
  bool prune_;
  std::size_t length_;
  std::vector<std::size_t> word_;
  std::vector<detail::NumMatrix> stack_;
  LevelResult result_;
};

}  // namespace

CompileResult brute_force_compile(const GateSet& gates,
                                  const CompileTarget& target,
                                  std::size_t max_len, const Rational& eps,
                                  const BruteForceOptions& options) {
  if (gates.empty()) {
    throw DomainError("cannot compile with an empty gate set");
  }
  if (eps.sign() <= 0) {
    throw DomainError("tolerance must be positive");
  }
  const Scorer scorer(gates, target);

  // Gates in label order, so depth-first enumeration visits words in
  // lexicographic order of their label sequences.
  std::vector<std::size_t> order(gates.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return gates.gate(a).label < gates.gate(b).label;
  });

  CompileResult result;
  Candidate best;
  best.screen = scorer.screen(detail::NumMatrix::identity(gates.dimension()));
  result.stats.nodes = 1;
  result.certified_error = scorer.certify(best.word, eps);

  const unsigned workers = std::max(1u, options.workers);
  for (std::size_t len = 1;
       len <= max_len && result.certified_error > eps; ++len) {
    std::vector<LevelResult> partial(workers);
    auto work = [&](unsigned w) {
      std::vector<std::size_t> firsts;
      for (std::size_t k = w; k < order.size(); k += workers) {
        firsts.push_back(order[k]);
      }
      LevelSearch search(gates, scorer, order, options.prune, len);
      partial[w] = search.run(firsts);
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }

    std::optional<Candidate> level_best;
    for (auto& p : partial) {
      result.stats.nodes += p.nodes;
      result.stats.exact_comparisons += p.exact;
      if (!p.best) continue;
      if (!level_best) {
        level_best = std::move(p.best);
        continue;
      }
      if (closer(scorer, *p.best, *level_best,
                 result.stats.exact_comparisons)) {
        level_best = std::move(p.best);
      } else if (!closer(scorer, *level_best, *p.best,
                         result.stats.exact_comparisons) &&
                 p.best->labels < level_best->labels) {
        level_best = std::move(p.best);
      }
    }
    result.stats.depth = len;
    if (level_best &&
        closer(scorer, *level_best, best, result.stats.exact_comparisons)) {
      best = std::move(*level_best);
      result.certified_error = scorer.certify(best.word, eps);
    }
  }
  result.word = gates.labels(best.word);
  return result;
}

}  // namespace braidgate::compiler
