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


#include "patrol/random_graph.h"

#include <string>
#include <vector>

#include "patrol/errors.h"

namespace patrol {

RngSeed DeriveSeed(RngSeed parent, std::uint64_t index) {
  std::uint64_t z = parent.value + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return RngSeed{z ^ (z >> 31)};
}

double UniformUnit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t UniformIndex(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = Rng::max() - Rng::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

Graph GenerateEr(const ErOptions& options, RngSeed seed) {
  if (options.n < 3) throw Error(ErrorCode::kInvalidArgument, "n must be >= 3");
  if (!(options.p > 0.0 && options.p < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "p must lie in (0, 1)");
  }
  if (!(options.length_low >= 0.0 &&
        options.length_low < options.length_high)) {
    throw Error(ErrorCode::kInvalidArgument,
                "need 0 <= length_low < length_high");
  }
  if (options.max_attempts <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "max_attempts must be positive");
  }

  Rng rng = MakeRng(seed);
  const double span = options.length_high - options.length_low;
  std::vector<EdgeSpec> edges;
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    edges.clear();
    for (NodeId i = 0; i < options.n; ++i) {
      for (NodeId j = i + 1; j < options.n; ++j) {
        if (UniformUnit(rng) < options.p) edges.push_back({i, j, 0.0});
      }
    }
    for (EdgeSpec& e : edges) {
      double length;
      do {
        length = options.length_low + span * UniformUnit(rng);
      } while (length <= options.length_low || length >= options.length_high);
      e.length = length;
    }
    Graph g = Graph::Build(options.n, edges);
    if (options.require_connected && !IsConnected(g)) continue;
    if (options.require_non_eulerian && IsEulerian(g)) continue;
    return g;
  }
  throw Error(ErrorCode::kGenerationBudgetExceeded,
              "no graph met the filter within " +
                  std::to_string(options.max_attempts) + " attempts");
}

}  // namespace patrol
