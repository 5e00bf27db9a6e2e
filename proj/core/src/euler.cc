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


#include "patrol/euler.h"

#include <algorithm>
#include <string>

#include "patrol/errors.h"

namespace patrol {
namespace {

void CheckStart(const MultiGraph& mg, NodeId start) {
  if (start < 0 || start >= mg.node_count()) {
    throw Error(ErrorCode::kInvalidArgument,
                "start node " + std::to_string(start) + " out of range");
  }
}

void RequireEulerian(const MultiGraph& mg, NodeId start) {
  CheckStart(mg, start);
  if (!IsEulerian(mg)) {
    throw Error(ErrorCode::kNotEulerian,
                "multigraph is disconnected or has odd-degree nodes");
  }
}

}  // namespace

WalkState::WalkState(const MultiGraph& mg, NodeId start)
    : mg_(&mg),
      start_(start),
      current_(start),
      nodes_{start},
      remaining_(mg.copy_count()),
      traversed_(mg.copy_count(), 0),
      times_traversed_(mg.base().edge_count(), 0),
      last_completion_(mg.base().edge_count(), 0.0) {
  CheckStart(mg, start);
}

std::optional<double> WalkState::LastCompletion(EdgeId e) const {
  if (times_traversed_[e] == 0) return std::nullopt;
  return last_completion_[e];
}

std::vector<Candidate> WalkState::IncidentUntraversed() const {
  std::vector<Candidate> out;
  for (CopyId c : mg_->Incident(current_)) {
    if (!traversed_[c]) out.push_back({mg_->EdgeOf(c).Other(current_), c});
  }
  return out;
}

void WalkState::Advance(CopyId c) {
  const Edge& e = mg_->EdgeOf(c);
  if (traversed_[c] || (e.u != current_ && e.v != current_)) {
    throw Error(ErrorCode::kInvalidArgument,
                "copy " + std::to_string(c) + " is not available at node " +
                    std::to_string(current_));
  }
  traversed_[c] = 1;
  --remaining_;
  length_ += e.length;
  ++times_traversed_[e.id];
  last_completion_[e.id] = length_;
  current_ = e.Other(current_);
  nodes_.push_back(current_);
  copies_.push_back(c);
}

bool LeavesRemainderConnected(const WalkState& state, CopyId copy) {
  if (state.remaining() == 1) return true;
  const MultiGraph& mg = state.graph();
  const NodeId far = mg.EdgeOf(copy).Other(state.current());
  std::vector<char> seen(mg.node_count(), 0);
  std::vector<NodeId> stack = {far};
  seen[far] = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (CopyId c : mg.Incident(v)) {
      if (c == copy || state.traversed(c)) continue;
      const NodeId w = mg.EdgeOf(c).Other(v);
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  for (const EdgeCopy& c : mg.copies()) {
    if (c.id == copy || state.traversed(c.id)) continue;
    if (!seen[mg.EdgeOf(c.id).u]) return false;
  }
  return true;
}

std::vector<Candidate> EligibleNext(const WalkState& state) {
  std::vector<Candidate> incident = state.IncidentUntraversed();
  if (incident.empty()) {
    if (state.done()) return incident;
    throw Error(ErrorCode::kStranded,
                "node " + std::to_string(state.current()) +
                    " has no untraversed edge but " +
                    std::to_string(state.remaining()) + " remain");
  }
  std::vector<Candidate> strict;
  for (const Candidate& c : incident) {
    if (LeavesRemainderConnected(state, c.copy)) strict.push_back(c);
  }
  std::vector<Candidate> out = strict.empty() ? std::move(incident) : std::move(strict);
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    return a.neighbor != b.neighbor ? a.neighbor < b.neighbor : a.copy < b.copy;
  });
  return out;
}

Candidate RandomSelector::Select(const WalkState& /*state*/,
                                 std::span<const Candidate> eligible) {
  // `eligible` is sorted by neighbor, so the first copy of each run is the
  // lowest one.
  std::vector<size_t> firsts;
  for (size_t i = 0; i < eligible.size(); ++i) {
    if (i == 0 || eligible[i].neighbor != eligible[i - 1].neighbor) {
      firsts.push_back(i);
    }
  }
  return eligible[firsts[UniformIndex(rng_, firsts.size())]];
}

Candidate FirstSelector::Select(const WalkState& /*state*/,
                                std::span<const Candidate> eligible) {
  return eligible.front();
}

EulerCycle Hierholzer(const MultiGraph& mg, NodeId start) {
  RequireEulerian(mg, start);
  std::vector<char> used(mg.copy_count(), 0);
  std::vector<size_t> cursor(mg.node_count(), 0);
  // Each frame: node reached and the copy used to reach it (-1 for start).
  std::vector<std::pair<NodeId, CopyId>> stack = {{start, -1}};
  std::vector<NodeId> nodes;
  std::vector<CopyId> copies;
  while (!stack.empty()) {
    const NodeId v = stack.back().first;
    std::span<const CopyId> incident = mg.Incident(v);
    size_t& k = cursor[v];
    while (k < incident.size() && used[incident[k]]) ++k;
    if (k < incident.size()) {
      const CopyId c = incident[k];
      used[c] = 1;
      stack.push_back({mg.EdgeOf(c).Other(v), c});
    } else {
      nodes.push_back(v);
      if (stack.back().second >= 0) copies.push_back(stack.back().second);
      stack.pop_back();
    }
  }
  std::reverse(nodes.begin(), nodes.end());
  std::reverse(copies.begin(), copies.end());
  return EulerCycle{Route(std::move(nodes)), std::move(copies)};
}

EulerCycle Fleury(const MultiGraph& mg, NodeId start, EdgeSelector& selector) {
  RequireEulerian(mg, start);
  WalkState state(mg, start);
  while (!state.done()) {
    const std::vector<Candidate> eligible = EligibleNext(state);
    const Candidate choice = selector.Select(state, eligible);
    const bool valid =
        std::any_of(eligible.begin(), eligible.end(), [&](const Candidate& c) {
          return c.copy == choice.copy;
        });
    if (!valid) {
      throw Error(ErrorCode::kInvalidArgument,
                  "selector returned a non-eligible copy");
    }
    state.Advance(choice.copy);
  }
  return EulerCycle{Route(state.partial_route()), state.used_copies()};
}

namespace {

class CycleEnumerator {
 public:
  CycleEnumerator(const MultiGraph& mg, NodeId start, std::size_t cap)
      : mg_(mg), start_(start), cap_(cap), used_(mg.copy_count(), 0) {
    nodes_.push_back(start);
  }

  CycleEnumeration Run() {
    Extend(start_);
    return std::move(result_);
  }

 private:
  // Returns false once the cap has been hit.
  bool Extend(NodeId v) {
    if (static_cast<int>(copies_.size()) == mg_.copy_count()) {
      if (v != start_) return true;
      if (result_.cycles.size() == cap_) {
        result_.cap_exceeded = true;
        return false;
      }
      result_.cycles.push_back(EulerCycle{Route(nodes_), copies_});
      return true;
    }
    for (CopyId c : mg_.Incident(v)) {
      if (used_[c]) continue;
      const NodeId w = mg_.EdgeOf(c).Other(v);
      used_[c] = 1;
      nodes_.push_back(w);
      copies_.push_back(c);
      const bool go_on = Extend(w);
      copies_.pop_back();
      nodes_.pop_back();
      used_[c] = 0;
      if (!go_on) return false;
    }
    return true;
  }

  const MultiGraph& mg_;
  NodeId start_;
  std::size_t cap_;
  std::vector<char> used_;
  std::vector<NodeId> nodes_;
  std::vector<CopyId> copies_;
  CycleEnumeration result_;
};

}  // namespace

CycleEnumeration EnumerateEulerianCycles(const MultiGraph& mg, NodeId start,
                                         std::size_t cap) {
  RequireEulerian(mg, start);
  return CycleEnumerator(mg, start, cap).Run();
}

}  // namespace patrol
