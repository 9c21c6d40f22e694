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

#include "braidgate/exactnum.hpp"

namespace {

using braidgate::exactnum::Cyclotomic;
using braidgate::exactnum::Rational;

Cyclotomic random_element(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 9);
  std::vector<Rational> coeffs(
      static_cast<std::size_t>(braidgate::exactnum::euler_phi(order)));
  for (auto& c : coeffs) c = Rational(num(rng), den(rng));
  return Cyclotomic(order, coeffs);
}

void BM_CyclotomicMultiply(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  const Cyclotomic a = random_element(rng, order);
  const Cyclotomic b = random_element(rng, order);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(8)->Arg(10)->Arg(40)->Arg(60);

void BM_CyclotomicInverse(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  std::mt19937_64 rng(8);
  const Cyclotomic a = random_element(rng, order);
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_CyclotomicInverse)->Arg(8)->Arg(10)->Arg(40);

// pi() is memoized, so time the partial sums and a fresh cosine instead.
void BM_BbpPartialSum(benchmark::State& state) {
  const int terms = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(braidgate::exactnum::bbp_partial_sum(terms));
  }
}
BENCHMARK(BM_BbpPartialSum)->Arg(8)->Arg(50)->Arg(200);

void BM_CosineDigits(benchmark::State& state) {
  const Rational eps =
      Rational::parse("1/10^" + std::to_string(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(braidgate::exactnum::real_approx(
        braidgate::exactnum::cos_two_pi(Rational(1, 7)), eps));
  }
}
BENCHMARK(BM_CosineDigits)->Arg(8)->Arg(50)->Arg(200);

}  // namespace
