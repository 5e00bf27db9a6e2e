// Copyright 2026 The Authors.
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

#include <vector>

#include "patrol/aoi.h"
#include "patrol/heuristic.h"
#include "patrol/postman.h"
#include "patrol/random_graph.h"
#include "patrol/simulate.h"

namespace {

using namespace patrol;

Graph MakeGraph(int n, double p) {
  ErOptions options;
  options.n = n;
  options.p = p;
  return GenerateEr(options, RngSeed{7});
}

void BM_EvaluateAoi(benchmark::State& state) {
  const Graph g = MakeGraph(static_cast<int>(state.range(0)), 0.3);
  const Route r = HeuristicRoute(g, BaseMultigraph::kPostman).route;
  for (auto _ : state) benchmark::DoNotOptimize(AverageAoi(g, r));
  state.counters["steps"] = r.step_count();
}
BENCHMARK(BM_EvaluateAoi)->Arg(10)->Arg(25)->Arg(50);

void BM_HeuristicRoute(benchmark::State& state) {
  const Graph g = MakeGraph(static_cast<int>(state.range(0)), 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(HeuristicRoute(g, BaseMultigraph::kPostman));
  }
}
BENCHMARK(BM_HeuristicRoute)->Arg(10)->Arg(25)->Arg(50);

void BM_RandomCpp(benchmark::State& state) {
  const Graph g = MakeGraph(static_cast<int>(state.range(0)), 0.3);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    RandomSelector selector(RngSeed{seed++});
    benchmark::DoNotOptimize(CppScheme(g, selector));
  }
}
BENCHMARK(BM_RandomCpp)->Arg(10)->Arg(25)->Arg(50);

void BM_CppAugment(benchmark::State& state) {
  const Graph g = MakeGraph(static_cast<int>(state.range(0)), 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(CppAugment(g));
  state.counters["odd"] = static_cast<double>(g.OddVertices().size());
}
BENCHMARK(BM_CppAugment)->Arg(10)->Arg(15)->Arg(25);

void BM_Matching(benchmark::State& state) {
  // Complete graph: every vertex odd when n is even.
  const int n = static_cast<int>(state.range(0));
  Rng rng = MakeRng(RngSeed{3});
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j, 0.1 + UniformUnit(rng)});
  }
  const Graph g = Graph::Build(n, edges);
  const ShortestPathTable table(g);
  std::vector<NodeId> vertices(n);
  for (int i = 0; i < n; ++i) vertices[i] = i;
  for (auto _ : state) benchmark::DoNotOptimize(MinWeightPerfectMatching(vertices, table));
}
BENCHMARK(BM_Matching)->Arg(8)->Arg(14)->Arg(20);

void BM_Simulate(benchmark::State& state) {
  const Graph g = MakeGraph(10, 0.3);
  const Route r = HeuristicRoute(g, BaseMultigraph::kPostman).route;
  const double dx = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(SimulateAoi(g, r, {dx, dx, 2, 1}));
}
BENCHMARK(BM_Simulate)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
