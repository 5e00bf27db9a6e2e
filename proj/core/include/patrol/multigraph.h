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


#ifndef PATROL_MULTIGRAPH_H_
#define PATROL_MULTIGRAPH_H_

#include <span>
#include <vector>

#include "patrol/graph.h"

namespace patrol {

using CopyId = int;

// One parallel copy of a base edge.
struct EdgeCopy {
  CopyId id;
  EdgeId edge;
};

// A base graph whose edges carry multiplicity 1 or 2. Copies of the same edge
// get distinct, dense copy ids so an Eulerian walk can consume a specific one.
class MultiGraph {
 public:
  // Throws kInvalidArgument unless multiplicity has one entry in {1, 2} per
  // base edge.
  MultiGraph(Graph base, std::vector<int> multiplicity);

  static MultiGraph Single(Graph base);

  const Graph& base() const { return base_; }
  int node_count() const { return base_.node_count(); }
  int Multiplicity(EdgeId e) const { return multiplicity_[e]; }
  const std::vector<int>& multiplicities() const { return multiplicity_; }

  int copy_count() const { return static_cast<int>(copies_.size()); }
  const std::vector<EdgeCopy>& copies() const { return copies_; }
  const EdgeCopy& copy(CopyId c) const { return copies_[c]; }
  const Edge& EdgeOf(CopyId c) const { return base_.edge(copies_[c].edge); }

  // Copy ids incident to `v`, in increasing copy id order.
  std::span<const CopyId> Incident(NodeId v) const { return incident_[v]; }
  int Degree(NodeId v) const { return static_cast<int>(incident_[v].size()); }

  // Sum over edges of multiplicity * length.
  double TotalLength() const;

  // Base edges with multiplicity 2, in id order.
  std::vector<EdgeId> DoubledEdges() const;

 private:
  Graph base_;
  std::vector<int> multiplicity_;
  std::vector<EdgeCopy> copies_;
  std::vector<std::vector<CopyId>> incident_;
};

// Connected (over nodes with nonzero degree, which must include every node)
// and all multigraph degrees even.
bool IsEulerian(const MultiGraph& mg);

inline double TotalLength(const MultiGraph& mg) { return mg.TotalLength(); }

}  // namespace patrol

#endif  // PATROL_MULTIGRAPH_H_
