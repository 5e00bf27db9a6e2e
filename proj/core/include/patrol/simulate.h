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


#ifndef PATROL_SIMULATE_H_
#define PATROL_SIMULATE_H_

#include "patrol/graph.h"
#include "patrol/route.h"

namespace patrol {

struct SimulationOptions {
  double dx = 1e-3;  // Spatial sample spacing along each edge.
  double dt = 1e-3;  // Upper bound on the time step.
  int warmup_periods = 2;
  int measure_periods = 4;
};

// Brute-force time-average age of a periodic route, independent of the
// closed-form evaluator. Each edge is cut into ceil(l/dx) equal cells sampled
// at their midpoints; time advances in equal steps of at most dt (an integer
// number per period); a cell's age resets when the patroller passes its
// midpoint and the reset takes effect at the end of that step. All ages start
// at 0, the first warmup_periods periods are discarded and the space-time
// integral of age is averaged over the next measure_periods periods.
//
// Accepts any closed walk that covers every edge. Throws kStepTooCoarse if
// dt exceeds a quarter of the shortest edge, kInvalidArgument for
// non-positive resolutions, warmup_periods < 2, measure_periods < 1 or an
// uncovered edge, and the ResolveSteps errors.
double SimulateAoi(const Graph& g, const Route& route,
                   const SimulationOptions& options = {});

}  // namespace patrol

#endif  // PATROL_SIMULATE_H_
