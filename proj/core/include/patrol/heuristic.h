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


#ifndef PATROL_HEURISTIC_H_
#define PATROL_HEURISTIC_H_

#include <span>

#include "patrol/euler.h"
#include "patrol/graph.h"
#include "patrol/multigraph.h"
#include "patrol/postman.h"

namespace patrol {

inline constexpr double kDefaultEpsilon = 0.01;

// Fixed inputs of the potential function for one walk. Distances are taken
// on the simple graph; duplication does not change them.
struct PotentialContext {
  const ShortestPathTable* distances = nullptr;
  double multigraph_length = 0.0;  // l(E'')
  double epsilon = kDefaultEpsilon;
};

// Priority of moving along `candidate` from the walk's current node:
//  - single edge:                    l(E'') / 2
//  - doubled edge, traversed once:   l(e) + tau, tau being the partial-route
//                                    length since that traversal finished
//  - doubled edge, not yet traversed max(l(E'')/2 + epsilon,
//                                        l(R) + l(e) + dist(u, v0))
// where l(R) is the partial-route length and v0 the walk's start.
double Potential(const WalkState& state, const PotentialContext& context,
                 const Candidate& candidate);

// Argmax of Potential; ties go to the smaller neighbor id, then copy id.
class PotentialSelector : public EdgeSelector {
 public:
  explicit PotentialSelector(PotentialContext context) : context_(context) {}
  Candidate Select(const WalkState& state,
                   std::span<const Candidate> eligible) override;

 private:
  PotentialContext context_;
};

enum class BaseMultigraph { kDuplicate, kPostman };

struct HeuristicOptions {
  double epsilon = kDefaultEpsilon;
};

// Builds the duplicated or postman multigraph and walks it with Fleury's
// algorithm driven by PotentialSelector, starting and ending at `start`.
EulerCycle HeuristicRoute(const Graph& g, BaseMultigraph base, NodeId start = 0,
                          const HeuristicOptions& options = {});

}  // namespace patrol

#endif  // PATROL_HEURISTIC_H_
