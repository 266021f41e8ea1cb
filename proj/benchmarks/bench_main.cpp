// Copyright 2026 The ssr Authors.
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

#include <map>
#include <memory>
#include <random>
#include <vector>

#include "ssr/modularity.hpp"
#include "ssr/parallel.hpp"
#include "ssr/partitioner.hpp"
#include "ssr/planted.hpp"
#include "ssr/relaxation.hpp"

namespace {

// Planted graphs are cached per vertex count; avg degree 20 gives 10n edges.
const ssr::Graph& planted(std::size_t n) {
  static std::map<std::size_t, std::unique_ptr<ssr::Graph>> cache;
  auto& slot = cache[n];
  if (!slot) {
    ssr::PlantedConfig cfg;
    cfg.n = n;
    cfg.communities = std::max<std::size_t>(2, n / 100);
    cfg.avg_degree = 20;
    cfg.max_degree = 60;
    cfg.mixing = 0.2;
    cfg.seed = 1;
    slot = std::make_unique<ssr::Graph>(ssr::generate_planted(cfg).graph);
  }
  return *slot;
}

void BM_Apply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto threads = static_cast<std::size_t>(state.range(1));
  const ssr::Graph& g = planted(n);
  ssr::ThreadPool pool(threads);
  ssr::KernelOptions opts;
  opts.pool = &pool;
  const auto op = ssr::ModularityOperator::whole_graph(g, opts);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> d;
  std::vector<double> x(n);
  for (double& v : x) v = d(rng);
  std::vector<double> y(n);
  for (auto _ : state) {
    op.apply(x, y);
    benchmark::DoNotOptimize(y.data());
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * g.num_edges()));
  state.counters["edges"] = static_cast<double>(g.num_edges());
}
BENCHMARK(BM_Apply)
    ->ArgsProduct({{10'000, 100'000}, {1, 2, 4}})
    ->ArgNames({"n", "threads"})
    ->UseRealTime();

void BM_Bipartition(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ssr::Graph& g = planted(n);
  const auto op = ssr::ModularityOperator::whole_graph(g);
  ssr::SsrConfig cfg;
  cfg.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ssr::ssr_bipartition(op, cfg).signs.data());
  }
}
BENCHMARK(BM_Bipartition)->Arg(1'000)->Arg(5'000)->Unit(benchmark::kMillisecond);

void BM_Detect(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ssr::Graph& g = planted(n);
  ssr::SsrConfig cfg;
  cfg.threads = 1;
  const auto method = state.range(1) == 0 ? ssr::Method::kSsr : ssr::Method::kSpectral;
  for (auto _ : state) {
    const auto report = ssr::detect(g, cfg, method);
    state.counters["Q"] = report.partition.q;
  }
}
BENCHMARK(BM_Detect)
    ->ArgsProduct({{1'000, 5'000}, {0, 1}})
    ->ArgNames({"n", "spectral"})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
