// Copyright 2026 The dickson-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>

#include "benchmark/benchmark.h"

#include "dickson_lab/dickson.hpp"
#include "dickson_lab/field.hpp"
#include "dickson_lab/nearfield.hpp"
#include "dickson_lab/structure.hpp"
#include "dickson_lab/theorems.hpp"

namespace {

using namespace dickson_lab;

DicksonNearfield make(std::int64_t q, std::int64_t n) {
  return DicksonNearfield::build(DicksonPair::make(static_cast<std::uint64_t>(q), static_cast<std::uint32_t>(n)));
}

void BM_FieldMul(benchmark::State& state) {
  const auto t = FieldTable::build(2, static_cast<std::uint32_t>(state.range(0)));
  std::uint32_t a = 3, acc = 1;
  for (auto _ : state) {
    acc = t.mul(FieldElement{acc}, FieldElement{a}).code;
    a = a + 1 == t.order() ? 1 : a + 1;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Arg(8)->Arg(16)->Arg(20);

void BM_FieldBuild(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(FieldTable::build(2, static_cast<std::uint32_t>(state.range(0))));
}
BENCHMARK(BM_FieldBuild)->Arg(10)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Circle(benchmark::State& state) {
  const auto nf = make(state.range(0), state.range(1));
  const std::uint32_t n = nf.order();
  std::uint32_t a = 1, b = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nf.circle_code(a, b));
    a = a + 1 == n ? 1 : a + 1;
    b = b + 7 >= n ? 1 : b + 7;
  }
}
BENCHMARK(BM_Circle)->Args({5, 4})->Args({31, 2});

void BM_Center(benchmark::State& state) {
  const auto nf = make(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(center(nf));
}
BENCHMARK(BM_Center)->Args({5, 4})->Args({31, 2})->Unit(benchmark::kMillisecond);

void BM_Kernel(benchmark::State& state) {
  const auto nf = make(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kernel(nf));
}
BENCHMARK(BM_Kernel)->Args({5, 4})->Args({31, 2})->Unit(benchmark::kMillisecond);

void BM_KernelBruteForce(benchmark::State& state) {
  const auto nf = make(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_bruteforce(nf));
}
BENCHMARK(BM_KernelBruteForce)->Args({7, 3})->Unit(benchmark::kMillisecond);

void BM_Axioms(benchmark::State& state) {
  const auto nf = make(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(verify_axioms(nf));
}
BENCHMARK(BM_Axioms)->Args({3, 2})->Args({7, 3})->Args({27, 2})->Unit(benchmark::kMillisecond);

void BM_BracketLemmaAllPairs(benchmark::State& state) {
  const auto pairs = enumerate_pairs(std::uint64_t{1} << 20);
  for (auto _ : state) {
    bool ok = true;
    for (const auto& p : pairs) ok &= verify_bracket_lemma(p).holds();
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_BracketLemmaAllPairs)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
