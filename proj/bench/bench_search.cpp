/*
 * Copyright 2026 The semibv Authors
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

#include "semibv/partition_search.hpp"
#include "semibv/suites.hpp"

namespace {

using namespace semibv;

struct Case {
  GridFunction2D f;
  GridFunction2D g;
};

Case make_case(std::size_t n) {
  Rng rng(n);
  GridFunction2D f = random_function(Instance::interval(), n, n, rng);
  GridFunction2D g = random_function(Instance::interval(), f.grid_t(), f.grid_s(), rng);
  return {std::move(f), std::move(g)};
}

FamilyConfig family(int k) {
  return k == 0 ? FamilyConfig::wiener(2) : FamilyConfig::korenblum_power(0.5, 2);
}

void BM_BranchAndBound(benchmark::State& state, bool parallel) {
  const Case c = make_case(static_cast<std::size_t>(state.range(0)));
  const FamilyConfig cfg = family(static_cast<int>(state.range(1)));
  for (auto _ : state) {
    SupResult r = solve_sup(c.f, c.g, cfg, Method::BranchAndBound, SearchOptions{parallel});
    benchmark::DoNotOptimize(r.value);
  }
  state.SetLabel(cfg.name());
}

void BM_BruteForce(benchmark::State& state) {
  const Case c = make_case(static_cast<std::size_t>(state.range(0)));
  const FamilyConfig cfg = family(static_cast<int>(state.range(1)));
  for (auto _ : state) {
    SupResult r = brute_force_sup(c.f, c.g, cfg);
    benchmark::DoNotOptimize(r.value);
  }
  state.SetLabel(cfg.name());
}

void sizes(benchmark::internal::Benchmark* b) {
  for (int k : {0, 1})
    for (int n : {6, 8, 10, 12}) b->Args({n, k});
}

BENCHMARK_CAPTURE(BM_BranchAndBound, serial, false)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BranchAndBound, openmp, true)
    ->Apply(sizes)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_BruteForce)->Args({6, 0})->Args({8, 0})->Args({6, 1})->Args({8, 1})->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
