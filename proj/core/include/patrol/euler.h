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


#ifndef PATROL_EULER_H_
#define PATROL_EULER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "patrol/multigraph.h"
#include "patrol/random_graph.h"
#include "patrol/route.h"

namespace patrol {

// A closed walk over a multigraph together with the copy consumed by each
// step; route.nodes()[i] -> route.nodes()[i + 1] uses copies[i].
struct EulerCycle {
  Route route;
  std::vector<CopyId> copies;
};

// A move available from the current node.
struct Candidate {
  NodeId neighbor;
  CopyId copy;
};

// Mutable bookkeeping of a walk in progress: which copies are used, the
// partial route and, per base edge, where along the partial route its most
// recent traversal finished.
class WalkState {
 public:
  // Throws kInvalidArgument if start is out of range.
  WalkState(const MultiGraph& mg, NodeId start);

  const MultiGraph& graph() const { return *mg_; }
  NodeId start() const { return start_; }
  NodeId current() const { return current_; }
  const std::vector<NodeId>& partial_route() const { return nodes_; }
  const std::vector<CopyId>& used_copies() const { return copies_; }
  double partial_length() const { return length_; }
  int remaining() const { return remaining_; }
  bool done() const { return remaining_ == 0; }

  bool traversed(CopyId c) const { return traversed_[c] != 0; }
  int TimesTraversed(EdgeId e) const { return times_traversed_[e]; }
  // Partial-route length at the end of the last traversal of `e`, if any.
  std::optional<double> LastCompletion(EdgeId e) const;

  // Untraversed copies incident to the current node.
  std::vector<Candidate> IncidentUntraversed() const;

  // Moves along `c`, which must be untraversed and incident to current().
  void Advance(CopyId c);

 private:
  const MultiGraph* mg_;
  NodeId start_;
  NodeId current_;
  std::vector<NodeId> nodes_;
  std::vector<CopyId> copies_;
  double length_ = 0.0;
  int remaining_;
  std::vector<char> traversed_;
  std::vector<int> times_traversed_;
  std::vector<double> last_completion_;
};

// True when, after consuming `copy` from the current node, every remaining
// untraversed copy is reachable from the far end over untraversed copies.
bool LeavesRemainderConnected(const WalkState& state, CopyId copy);

// Fleury's candidate set at the current node: the incident untraversed copies
// that keep the remainder connected, or all incident untraversed copies when
// none does (the bridge is then taken). Sorted by (neighbor, copy). Throws
// kStranded if the current node has no untraversed copy while some remain.
std::vector<Candidate> EligibleNext(const WalkState& state);

// Chooses the next move of a Fleury walk.
class EdgeSelector {
 public:
  virtual ~EdgeSelector() = default;
  // `eligible` is nonempty; the result must be one of its elements.
  virtual Candidate Select(const WalkState& state,
                           std::span<const Candidate> eligible) = 0;
};

// Uniform choice over the distinct eligible neighbors, then the lowest copy
// id towards that neighbor.
class RandomSelector : public EdgeSelector {
 public:
  explicit RandomSelector(RngSeed seed) : rng_(MakeRng(seed)) {}
  Candidate Select(const WalkState& state,
                   std::span<const Candidate> eligible) override;

 private:
  Rng rng_;
};

// Always the first eligible candidate (lowest neighbor, then copy).
class FirstSelector : public EdgeSelector {
 public:
  Candidate Select(const WalkState& state,
                   std::span<const Candidate> eligible) override;
};

// Both throw kNotEulerian for odd degrees or a disconnected multigraph, and
// kInvalidArgument for an out-of-range start.
EulerCycle Hierholzer(const MultiGraph& mg, NodeId start);
EulerCycle Fleury(const MultiGraph& mg, NodeId start, EdgeSelector& selector);

struct CycleEnumeration {
  std::vector<EulerCycle> cycles;
  bool cap_exceeded = false;
};

// Every Eulerian cycle from `start` as a distinct directed copy sequence
// (parallel copies and reflections count separately), by backtracking.
// Stops after `cap` cycles with cap_exceeded set if more exist.
CycleEnumeration EnumerateEulerianCycles(const MultiGraph& mg, NodeId start,
                                         std::size_t cap);

}  // namespace patrol

#endif  // PATROL_EULER_H_
