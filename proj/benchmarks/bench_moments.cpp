// Copyright 2026 The ldpc-moments Authors
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

#include <benchmark/benchmark.h>

#include "ldpc/ensemble.hpp"
#include "ldpc/exact.hpp"
#include "ldpc/first_moment.hpp"
#include "ldpc/second_moment.hpp"

namespace {

const ldpc::EnsembleParams k36(3, 6);

void BM_SolveSaddle(benchmark::State& state) {
  double w = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ldpc::solve_saddle(k36, ldpc::Kind::weight, w));
    w = w < 0.98 ? w + 0.01 : 0.01;
  }
}
BENCHMARK(BM_SolveSaddle);

void BM_SolveOverlap(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ldpc::solve_overlap(k36, ldpc::Kind::weight, 0.3, 0.05));
  }
}
BENCHMARK(BM_SolveOverlap);

void BM_Concentration(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ldpc::concentration(k36, ldpc::Kind::weight, 0.3, 0.95));
  }
}
BENCHMARK(BM_Concentration)->Unit(benchmark::kMillisecond);

void BM_PowerCoeff(benchmark::State& state) {
  const auto f = ldpc::expand_pair_gf(k36, ldpc::Kind::weight);
  const int n = static_cast<int>(state.range(0));
  const int k = n / 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ldpc::power_coeff(f, n / 2, {k, k, k}));
  }
}
BENCHMARK(BM_PowerCoeff)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);

void BM_CountWords(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    const auto g = ldpc::sample_graph(k36, n, seed++);
    benchmark::DoNotOptimize(ldpc::count_words(g, n / 3, ldpc::Kind::weight));
  }
}
BENCHMARK(BM_CountWords)->Arg(12)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
