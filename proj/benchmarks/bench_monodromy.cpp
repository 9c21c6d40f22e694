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

#include "braidgate/monodromy.hpp"
#include "braidgate/transport.hpp"

namespace {

using braidgate::localsys::TwistParams;

void BM_KzRep(benchmark::State& state) {
  const int defects = static_cast<int>(state.range(0));
  std::vector<int> weights(static_cast<std::size_t>(defects), 1);
  const TwistParams p(defects, 1, 5, weights);
  for (auto _ : state) benchmark::DoNotOptimize(braidgate::monodromy::kz_rep(p));
}
BENCHMARK(BM_KzRep)->Arg(3)->Arg(4)->Arg(5);

void BM_VerifyRelations(benchmark::State& state) {
  const auto rep = braidgate::monodromy::kz_rep(
      TwistParams(5, 1, 5, {1, 2, 3, 1, 2}));
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        braidgate::monodromy::verify_relations(rep, workers));
  }
}
BENCHMARK(BM_VerifyRelations)->Arg(1)->Arg(4);

void BM_Transport(benchmark::State& state) {
  const auto family = braidgate::transport::family_from_params(
      braidgate::localsys::fibonacci_preset());
  std::vector<braidgate::braid::PureLetter> letters;
  for (int k = 0; k < state.range(0); ++k) {
    letters.push_back({1 + k % 2, 3, k % 3 == 0});
  }
  const braidgate::braid::PureBraidWord w(3, letters);
  for (auto _ : state) {
    benchmark::DoNotOptimize(braidgate::transport::transport(family, w));
  }
}
BENCHMARK(BM_Transport)->Arg(10)->Arg(100);

}  // namespace
