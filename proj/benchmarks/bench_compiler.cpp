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

#include "braidgate/compiler.hpp"

namespace {

using braidgate::compiler::CompileTarget;
using braidgate::exactnum::Cyclotomic;
using braidgate::exactnum::Rational;

void BM_BruteForce(benchmark::State& state) {
  const auto family = braidgate::transport::family_from_params(
      braidgate::localsys::fibonacci_preset());
  const auto gates =
      braidgate::compiler::gate_set_from_family(family, {{1, 2}, {2, 3}});
  auto m = braidgate::exactnum::cyclo_identity(2, 10);
  m(0, 1) = Cyclotomic::zeta(10, 3);
  m(1, 1) = Cyclotomic::zeta(10, 7);
  const CompileTarget target(m);
  const auto max_len = static_cast<std::size_t>(state.range(0));
  const auto workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(braidgate::compiler::brute_force_compile(
        gates, target, max_len, Rational(1, 1000000000), {workers, true}));
  }
}
BENCHMARK(BM_BruteForce)
    ->Args({4, 1})
    ->Args({6, 1})
    ->Args({6, 4})
    ->Unit(benchmark::kMillisecond);

void BM_Certify(benchmark::State& state) {
  const auto family = braidgate::transport::family_from_params(
      braidgate::localsys::fibonacci_preset());
  const auto gates = braidgate::compiler::gate_set_from_family(family);
  const std::vector<std::string> word{"b1_2", "b2_3^-1", "b1_3", "b1_2"};
  const CompileTarget target(braidgate::exactnum::cyclo_identity(2, 10));
  const Rational eps =
      Rational::parse("1/10^" + std::to_string(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        braidgate::compiler::certify(gates, word, target, eps));
  }
}
BENCHMARK(BM_Certify)->Arg(6)->Arg(30);

}  // namespace
