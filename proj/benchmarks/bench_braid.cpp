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


#include <benchmark/benchmark.h>

#include <random>

#include "braidgate/braid.hpp"

namespace {

using braidgate::braid::BraidWord;

BraidWord random_word(std::mt19937_64& rng, int strands, std::size_t length) {
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::vector<int> letters(length);
  for (auto& l : letters) l = (rng() & 1) ? gen(rng) : -gen(rng);
  return BraidWord(strands, letters);
}

void BM_GarsideNormalForm(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const BraidWord w = random_word(rng, static_cast<int>(state.range(0)),
                                  static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(braidgate::braid::garside_normal_form(w));
  }
}
BENCHMARK(BM_GarsideNormalForm)
    ->Args({3, 20})
    ->Args({4, 50})
    ->Args({6, 50})
    ->Args({6, 200});

void BM_PureRelators(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        braidgate::braid::pure_relators(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_PureRelators)->Arg(4)->Arg(6);

}  // namespace
