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
#include <catch2/catch_amalgamated.hpp>
#include <numeric>

#include "braidgate/braid.hpp"
#include "braidgate/errors.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace braidgate::braid {
namespace {

using testing::Gen;
using testing::insert_at;

long exponent_sum(const BraidWord& w) {
  long s = 0;
  for (int l : w.letters()) s += l > 0 ? 1 : -1;
  return s;
}

SCENARIO("Free reduction") {
  REQUIRE(free_reduce(BraidWord(3, {1, -1})).empty());
  REQUIRE(free_reduce(BraidWord(3, {1, 2, -2, 1})) == BraidWord(3, {1, 1}));
  REQUIRE(free_reduce(BraidWord(4, {1, 2, -3, 2})) ==
          BraidWord(4, {1, 2, -3, 2}));
  REQUIRE(free_reduce(BraidWord(3, {2, 1, -1, -2, 1})) == BraidWord(3, {1}));
  REQUIRE(free_reduce(PureBraidWord::parse("strands=3;+(1,3);-(1,3);+(1,2)")) ==
          PureBraidWord::parse("strands=3;+(1,2)"));
  GIVEN("Random words") {
    Gen gen(101);
    for (int k = 0; k < 200; ++k) {
      const BraidWord w = gen.braid_word(gen.uniform(2, 6), 12);
      const BraidWord r = free_reduce(w);
      for (std::size_t i = 0; i + 1 < r.length(); ++i) {
        REQUIRE(r.letters()[i] != -r.letters()[i + 1]);
      }
      REQUIRE(free_reduce(r) == r);
      REQUIRE(words_equal(w, r));
    }
  }
}

SCENARIO("Permutation of a braid") {
  REQUIRE(perm(BraidWord(3)).is_identity());
  REQUIRE(perm(BraidWord(3, {1})) == Permutation::adjacent(3, 1));
  REQUIRE(perm(BraidWord(3, {1})).to_string() == "[2,1,3]");
  REQUIRE(perm(BraidWord(3, {-1})) == perm(BraidWord(3, {1})));
  REQUIRE(perm(BraidWord(3, {1, 2, 1})) == perm(BraidWord(3, {2, 1, 2})));
  GIVEN("Homomorphism on random pairs") {
    Gen gen(102);
    for (int k = 0; k < 500; ++k) {
      const int n = gen.uniform(2, 7);
      const BraidWord u = gen.braid_word(n, 10);
      const BraidWord v = gen.braid_word(n, 10);
      REQUIRE(perm(concat(u, v)) == compose(perm(u), perm(v)));
      REQUIRE(perm(inverse(u)) == perm(u).inverse());
    }
  }
  GIVEN("Invalid permutations") {
    REQUIRE_THROWS_AS(Permutation(std::vector<int>{1, 1, 2}), DomainError);
  }
}

SCENARIO("Purity and the lasso generators") {
  REQUIRE(is_pure(BraidWord(2, {1, 1})));
  REQUIRE_FALSE(is_pure(BraidWord(2, {1})));
  REQUIRE(embed_pure(PureLetter{1, 2, false}, 2) == BraidWord(2, {1, 1}));
  REQUIRE(embed_pure(PureLetter{1, 3, false}, 3) == BraidWord(3, {2, 1, 1, -2}));
  REQUIRE(embed_pure(PureLetter{1, 2, true}, 2) == BraidWord(2, {-1, -1}));
  REQUIRE(embed_pure(PureLetter{2, 5, false}, 5) ==
          BraidWord(5, {4, 3, 2, 2, -3, -4}));
  GIVEN("Random pure words land in the kernel of perm") {
    Gen gen(103);
    for (int k = 0; k < 500; ++k) {
      const PureBraidWord w = gen.pure_word(gen.uniform(2, 7), 8);
      REQUIRE(is_pure(embed_pure(w)));
    }
  }
  GIVEN("The lasso b13 against the Burau oracle") {
    // Both sides of the Artin relation that defines b13 through b12.
    const auto t = exactnum::Cyclotomic::zeta(7);
    const BraidWord b13 = embed_pure(PureLetter{1, 3, false}, 3);
    REQUIRE(testing::burau_product(b13, t) ==
            testing::burau_product(BraidWord(3, {-1, 2, 2, 1}), t));
    REQUIRE(words_equal(b13, BraidWord(3, {-1, 2, 2, 1})));
  }
}

SCENARIO("Garside normal forms") {
  GIVEN("The Artin relations") {
    REQUIRE(garside_normal_form(BraidWord(3, {1, 2, 1})) ==
            garside_normal_form(BraidWord(3, {2, 1, 2})));
    REQUIRE(garside_normal_form(BraidWord(5, {1, 3})) ==
            garside_normal_form(BraidWord(5, {3, 1})));
    REQUIRE_FALSE(garside_normal_form(BraidWord(3, {1})) ==
                  garside_normal_form(BraidWord(3, {-1})));
    REQUIRE(garside_normal_form(BraidWord(3, {1, 2, 1})).to_string() ==
            "Delta^1");
    REQUIRE(garside_normal_form(BraidWord(3)).to_string() == "Delta^0");
  }
  GIVEN("Canonical factors") {
    Gen gen(104);
    for (int k = 0; k < 200; ++k) {
      const int n = gen.uniform(2, 6);
      const BraidWord w = gen.braid_word(n, 14);
      const GarsideNormalForm nf = garside_normal_form(w);
      for (const auto& f : nf.factors) {
        REQUIRE_FALSE(std::is_sorted(f.begin(), f.end()));
        REQUIRE_FALSE(std::is_sorted(f.rbegin(), f.rend()));
      }
      REQUIRE(words_equal(nf.to_word(), w));
      REQUIRE(garside_normal_form(nf.to_word()) == nf);
    }
  }
  GIVEN("Relator insertion never changes the normal form") {
    Gen gen(105);
    for (int k = 0; k < 500; ++k) {
      const int n = gen.uniform(3, 6);
      const auto rels = relators(n);
      const BraidWord w = gen.braid_word(n, 10);
      const BraidWord& r = rels[gen.index(rels.size())];
      const BraidWord r_used = gen.coin() ? r : inverse(r);
      const BraidWord v = insert_at(w, gen.index(w.length() + 1), r_used);
      REQUIRE(garside_normal_form(v) == garside_normal_form(w));
    }
  }
  GIVEN("Appending a generator always changes the normal form") {
    Gen gen(106);
    for (int k = 0; k < 500; ++k) {
      const int n = gen.uniform(2, 6);
      const BraidWord w = gen.braid_word(n, 10);
      const BraidWord v = concat(w, BraidWord(n, {gen.artin_letter(n)}));
      REQUIRE(std::abs(exponent_sum(v) - exponent_sum(w)) == 1);
      REQUIRE_FALSE(garside_normal_form(v) == garside_normal_form(w));
    }
  }
}

SCENARIO("Word equality against the Burau oracle") {
  const auto t = exactnum::Cyclotomic::from_rational(1, 2);
  GIVEN("Equal braids have equal Burau matrices") {
    Gen gen(107);
    for (int k = 0; k < 200; ++k) {
      const int n = gen.uniform(3, 5);
      const auto rels = relators(n);
      const BraidWord w = gen.braid_word(n, 8);
      const BraidWord v =
          insert_at(w, gen.index(w.length() + 1), rels[gen.index(rels.size())]);
      REQUIRE(words_equal(w, v));
      REQUIRE(testing::burau_product(w, t) == testing::burau_product(v, t));
    }
  }
  GIVEN("Short three strand words") {
    // The three strand Burau representation at t = 2 separates these.
    Gen gen(108);
    int agreements = 0;
    for (int k = 0; k < 400; ++k) {
      const BraidWord u = gen.braid_word(3, 5);
      const BraidWord v = gen.braid_word(3, 5);
      const bool same = testing::burau_product(u, t) ==
                        testing::burau_product(v, t);
      REQUIRE(words_equal(u, v) == same);
      agreements += same ? 1 : 0;
    }
    REQUIRE(agreements > 0);
  }
}

SCENARIO("words_equal contract") {
  REQUIRE(words_equal(BraidWord(3), BraidWord(3, {1, -1})));
  REQUIRE_FALSE(words_equal(BraidWord(3, {1, 2}), BraidWord(3, {1, 2, 1})));
  REQUIRE_THROWS_AS(words_equal(BraidWord(3), BraidWord(4)), DomainError);
  REQUIRE(words_equal(PureBraidWord::parse("strands=3;+(1,2);-(1,2)"),
                      PureBraidWord(3)));
}

SCENARIO("Relators") {
  GIVEN("Three strands") {
    const auto artin = relators(3);
    REQUIRE(std::find(artin.begin(), artin.end(),
                      BraidWord(3, {1, 2, 1, -2, -1, -2})) != artin.end());
    const auto pure = pure_relators(3);
    REQUIRE(std::find(pure.begin(), pure.end(),
                      PureBraidWord::parse("strands=3;+(2,3);+(1,2);+(1,3);"
                                           "-(2,3);-(1,3);-(1,2)")) !=
            pure.end());
  }
  GIVEN("Every relator is trivial for N <= 6") {
    for (int n = 2; n <= 6; ++n) {
      for (const auto& r : relators(n)) {
        REQUIRE(words_equal(r, BraidWord(n)));
      }
      for (const auto& r : pure_relators(n)) {
        REQUIRE(words_equal(r, PureBraidWord(n)));
        REQUIRE(words_equal(embed_pure(r), BraidWord(n)));
      }
    }
  }
  GIVEN("Counts of the relation families") {
    // Far commutations plus braid relations.
    for (int n = 2; n <= 7; ++n) {
      const int far = (n - 2) * (n - 3) / 2;
      REQUIRE(relators(n).size() == static_cast<std::size_t>(far + n - 2));
    }
    REQUIRE(pure_relators(2).empty());
    REQUIRE(pure_relators(3).size() == 2);
  }
  GIVEN("Deterministic order") {
    REQUIRE(relators(6) == relators(6));
    REQUIRE(pure_relators(5) == pure_relators(5));
  }
}

SCENARIO("Projection forgets trailing strands") {
  REQUIRE(project(PureBraidWord::parse("strands=4;+(1,2);+(1,4)"), 2) ==
          PureBraidWord::parse("strands=2;+(1,2)"));
  REQUIRE_THROWS_AS(project(PureBraidWord(3), 4), DomainError);
  Gen gen(109);
  for (int k = 0; k < 200; ++k) {
    const int n = gen.uniform(2, 6);
    const int m = gen.uniform(2, n);
    const PureBraidWord u = gen.pure_word(n, 8);
    const PureBraidWord v = gen.pure_word(n, 8);
    REQUIRE(project(concat(u, v), m) == concat(project(u, m), project(v, m)));
    REQUIRE(project(u, n) == u);
    // Forgetting strands respects the relations of the source group.
    const auto rels = pure_relators(n);
    if (!rels.empty()) {
      const PureBraidWord r = rels[gen.index(rels.size())];
      REQUIRE(words_equal(project(r, m), PureBraidWord(m)));
    }
  }
}

SCENARIO("Concatenation and inversion") {
  Gen gen(110);
  for (int k = 0; k < 200; ++k) {
    const int n = gen.uniform(2, 6);
    const BraidWord a = gen.braid_word(n, 8);
    const BraidWord b = gen.braid_word(n, 8);
    const BraidWord c = gen.braid_word(n, 8);
    REQUIRE(words_equal(concat(a, inverse(a)), BraidWord(n)));
    REQUIRE(inverse(inverse(a)) == a);
    REQUIRE(words_equal(concat(concat(a, b), c), concat(a, concat(b, c))));
    const PureBraidWord p = gen.pure_word(n, 6);
    REQUIRE(inverse(inverse(p)) == p);
    REQUIRE(words_equal(concat(p, inverse(p)), PureBraidWord(n)));
  }
  REQUIRE_THROWS_AS(concat(BraidWord(3), BraidWord(4)), DomainError);
  REQUIRE_THROWS_AS(concat(PureBraidWord(3), PureBraidWord(4)), DomainError);
}

SCENARIO("Word text formats") {
  REQUIRE(BraidWord::parse("strands=3;1,2,-1") == BraidWord(3, {1, 2, -1}));
  REQUIRE(BraidWord::parse(4, "3,-1") == BraidWord(4, {3, -1}));
  REQUIRE(BraidWord::parse("strands=3;") == BraidWord(3));
  REQUIRE(PureBraidWord::parse("strands=4;+(1,3);-(2,4)").letters().size() ==
          2);
  Gen gen(111);
  for (int k = 0; k < 100; ++k) {
    const BraidWord w = gen.braid_word(gen.uniform(2, 6), 8);
    REQUIRE(BraidWord::parse(w.to_string()) == w);
    const PureBraidWord p = gen.pure_word(gen.uniform(2, 6), 8);
    REQUIRE(PureBraidWord::parse(p.to_string()) == p);
  }
  for (const char* bad : {"strands=3;0", "strands=3;3", "strands=3;1,x",
                          "3;1", "strands=0;"}) {
    INFO(bad);
    REQUIRE_THROWS_AS(BraidWord::parse(bad), DomainError);
  }
  REQUIRE(PureBraidWord::parse("strands=3;(1,2)") ==
          PureBraidWord::parse("strands=3;+(1,2)"));
  REQUIRE(PureBraidWord::parse("strands=3;+(2,1)") ==
          PureBraidWord::parse("strands=3;+(1,2)"));
  for (const char* bad : {"strands=3;+(2,2)", "strands=3;+(1,4)",
                          "strands=3;+1,2", "strands=3;+(1,2"}) {
    INFO(bad);
    REQUIRE_THROWS_AS(PureBraidWord::parse(bad), DomainError);
  }
}

}  // namespace
}  // namespace braidgate::braid
