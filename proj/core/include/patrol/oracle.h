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


#ifndef PATROL_ORACLE_H_
#define PATROL_ORACLE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "patrol/graph.h"
#include "patrol/multigraph.h"
#include "patrol/random_graph.h"
#include "patrol/route.h"

namespace patrol {

// Exhaustive search over the routes that traverse every edge once or twice,
// for tiny graphs only.
//
// Completeness assumption: every such route is an Eulerian cycle of the
// multigraph obtained by doubling the edges it traverses twice, so searching
// all even-degree duplications and all their Eulerian cycles covers the set.

struct OracleOptions {
  // Backtracking steps allowed across one call before kBudgetExceeded.
  std::uint64_t max_states = 10'000'000;
  // Larger edge sets are refused with kBudgetExceeded.
  int max_edges = 12;
};

// Every duplication set S (multiplicity 2 on S, 1 elsewhere) that makes all
// degrees even, in increasing bitmask order of S. Throws kBudgetExceeded
// above options.max_edges and kInvalidArgument for a disconnected graph.
std::vector<MultiGraph> EnumerateF1Multigraphs(const Graph& g,
                                               int max_edges = 12);

struct SearchResult {
  Route route;
  double aoi = 0.0;
  std::uint64_t cycles_evaluated = 0;
  std::uint64_t states_visited = 0;
};

// Minimum-AoI Eulerian cycle of one multigraph. Cycles are enumerated from
// node 0 with parallel copies treated as interchangeable and each cyclic
// rotation evaluated once.
SearchResult BestCycle(const MultiGraph& mg, const OracleOptions& options = {});

// Minimum AoI over all F1 routes with one witness.
SearchResult OptimalF1(const Graph& g, const OracleOptions& options = {});

// Lower bound on the number of Eulerian cycles through a fixed
// node: 2^(1 - n(V) + copies). For a simple graph the fully doubled multigraph
// is used (copies = 2 n(E)). Throws kInvalidArgument when the exponent is
// negative or does not fit 63 bits.
std::uint64_t CountBound(const MultiGraph& mg);
std::uint64_t CountBound(const Graph& g);

struct SchemeRatio {
  std::string scheme;
  Route route;
  double aoi = 0.0;
  double ratio_to_optimum = 0.0;
  double ratio_to_lower_bound = 0.0;
  bool within_bound = false;  // Both ratios <= 2 + 1e-9.
};

struct RatioReport {
  SearchResult optimum;
  double lower_bound = 0.0;
  std::vector<SchemeRatio> schemes;
  bool all_within_bound = false;
};

// Runs dup, cpp (Hierholzer), heu_dup, heu_cpp, rand_dup and rand_cpp from
// node 0 and compares them with the exhaustive optimum and l(E)^2 / 2.
RatioReport VerifyRatios(const Graph& g, RngSeed seed = RngSeed{1},
                         const OracleOptions& options = {});

}  // namespace patrol

#endif  // PATROL_ORACLE_H_
