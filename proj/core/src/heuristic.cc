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


#include "patrol/heuristic.h"

#include <algorithm>

#include "patrol/errors.h"

namespace patrol {

double Potential(const WalkState& state, const PotentialContext& context,
                 const Candidate& candidate) {
  const MultiGraph& mg = state.graph();
  const Edge& e = mg.EdgeOf(candidate.copy);
  const double half = 0.5 * context.multigraph_length;
  if (mg.Multiplicity(e.id) == 1) return half;
  if (const std::optional<double> last = state.LastCompletion(e.id)) {
    const double tau = state.partial_length() - *last;
    return e.length + tau;
  }
  if (context.distances == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, "potential needs a distance table");
  }
  const double reach = state.partial_length() + e.length +
                       context.distances->Dist(candidate.neighbor, state.start());
  return std::max(half + context.epsilon, reach);
}

Candidate PotentialSelector::Select(const WalkState& state,
                                    std::span<const Candidate> eligible) {
  // `eligible` is sorted by (neighbor, copy); keep the first maximum.
  Candidate best = eligible.front();
  double best_potential = Potential(state, context_, best);
  for (const Candidate& c : eligible.subspan(1)) {
    const double p = Potential(state, context_, c);
    if (p > best_potential) {
      best = c;
      best_potential = p;
    }
  }
  return best;
}

EulerCycle HeuristicRoute(const Graph& g, BaseMultigraph base, NodeId start,
                          const HeuristicOptions& options) {
  const MultiGraph mg =
      base == BaseMultigraph::kDuplicate ? DuplicateAll(g) : CppAugment(g);
  const ShortestPathTable distances(g);
  PotentialSelector selector(
      PotentialContext{&distances, mg.TotalLength(), options.epsilon});
  return Fleury(mg, start, selector);
}

}  // namespace patrol
