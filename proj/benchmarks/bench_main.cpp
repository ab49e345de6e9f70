/*
 * Copyright 2026 The degpart Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <benchmark/benchmark.h>

#include "degpart/error.hpp"
#include "degpart/feasibility.hpp"
#include "degpart/generate.hpp"
#include "degpart/patterns.hpp"
#include "degpart/solver.hpp"

using namespace degpart;

namespace {

Graph sample(std::size_t n, double p) { return generate_graph(n, p, 20261016); }

DemandPair planted(const Graph& g, PlantVariant variant) {
  for (std::uint64_t seed = 0;; ++seed) {
    try {
      return plant_demands(g, variant, PlantMode::Tight, seed);
    } catch (const Error&) {
      if (seed > 64) return DemandPair::uniform(g.order(), 1, 1);
    }
  }
}

void BM_FCore(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = sample(n, 8.0 / static_cast<double>(n));
  const auto f = Threshold::uniform(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(f_core(g, g.all_vertices(), f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FCore)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_ClassifyBook(benchmark::State& state) {
  const auto g = sample(static_cast<std::size_t>(state.range(0)), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(classify_book_b3(g));
}
BENCHMARK(BM_ClassifyBook)->RangeMultiplier(2)->Range(16, 256);

void BM_ClassifyK23(benchmark::State& state) {
  const auto g = sample(static_cast<std::size_t>(state.range(0)), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(classify_k23(g));
}
BENCHMARK(BM_ClassifyK23)->RangeMultiplier(2)->Range(16, 256);

void BM_S1(benchmark::State& state) {
  const auto g = sample(static_cast<std::size_t>(state.range(0)), 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(s1_vertices(g));
}
BENCHMARK(BM_S1)->RangeMultiplier(2)->Range(16, 128);

void BM_Oracle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = sample(n, 0.5);
  const auto d = DemandPair::uniform(n, static_cast<std::int64_t>(n), 0);
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_oracle(g, d));
}
BENCHMARK(BM_Oracle)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

void BM_LocalSearch(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = sample(n, 0.3);
  const auto d = planted(g, PlantVariant::MainI);
  const auto h = classify(g, PatternKind::BookB3).h;
  const auto init = degenerate_init(g, d, h);
  for (auto _ : state) benchmark::DoNotOptimize(local_search(g, d, h, init));
}
BENCHMARK(BM_LocalSearch)->RangeMultiplier(2)->Range(16, 256)->Unit(benchmark::kMicrosecond);

void BM_Solve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = sample(n, 0.5);
  const auto d = planted(g, PlantVariant::MainI);
  SolveConfig cfg;
  cfg.oracle_limit = 20;
  for (auto _ : state) benchmark::DoNotOptimize(solve(g, d, cfg));
}
BENCHMARK(BM_Solve)->DenseRange(8, 20, 4)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
