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


#ifndef PATROL_RANDOM_GRAPH_H_
#define PATROL_RANDOM_GRAPH_H_

#include <cstdint>
#include <random>

#include "patrol/graph.h"

namespace patrol {

struct RngSeed {
  std::uint64_t value = 0;

  friend bool operator==(RngSeed, RngSeed) = default;
};

// Deterministic child seed for stream `index` of `parent` (splitmix64 mix).
RngSeed DeriveSeed(RngSeed parent, std::uint64_t index);

using Rng = std::mt19937_64;

inline Rng MakeRng(RngSeed seed) { return Rng(seed.value); }

// Uniform double in [0, 1) from the top 53 bits of one engine draw. Unlike
// std::uniform_real_distribution this is identical across standard libraries.
double UniformUnit(Rng& rng);

// Uniform integer in [0, bound) by rejection; bound > 0.
std::uint64_t UniformIndex(Rng& rng, std::uint64_t bound);

struct ErOptions {
  int n = 10;
  double p = 0.2;
  double length_low = 0.0;
  double length_high = 10.0;
  bool require_connected = true;
  bool require_non_eulerian = true;
  int max_attempts = 10000;
};

// G(n, p) with i.i.d. lengths in (length_low, length_high), redrawn until the
// required predicates hold. Each attempt draws the edge indicators for all
// pairs (i < j, row-major) and then one length per kept edge. A length equal
// to length_low is redrawn. Throws kGenerationBudgetExceeded after
// max_attempts rejected draws and kInvalidArgument on bad parameters.
Graph GenerateEr(const ErOptions& options, RngSeed seed);

}  // namespace patrol

#endif  // PATROL_RANDOM_GRAPH_H_
