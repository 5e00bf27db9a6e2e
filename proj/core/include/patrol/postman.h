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


#ifndef PATROL_POSTMAN_H_
#define PATROL_POSTMAN_H_

#include <span>
#include <utility>
#include <vector>

#include "patrol/euler.h"
#include "patrol/graph.h"
#include "patrol/multigraph.h"

namespace patrol {

// All-pairs shortest paths of a simple graph. Among paths of equal length
// (relative tolerance 1e-12) the one with fewer hops wins, then the
// lexicographically smallest node sequence.
class ShortestPathTable {
 public:
  explicit ShortestPathTable(const Graph& g);

  int node_count() const { return n_; }
  double Dist(NodeId s, NodeId t) const { return dist_[Index(s, t)]; }
  int Hops(NodeId s, NodeId t) const { return hops_[Index(s, t)]; }
  // Node sequence s, ..., t of the selected shortest path ({s} when s == t).
  std::vector<NodeId> Path(NodeId s, NodeId t) const;

 private:
  size_t Index(NodeId s, NodeId t) const {
    return static_cast<size_t>(s) * n_ + t;
  }

  int n_;
  std::vector<double> dist_;
  std::vector<int> hops_;
  std::vector<NodeId> next_hop_;
};

struct Matching {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  double total_cost = 0.0;
};

inline constexpr int kMaxExactMatchingVertices = 20;

// Exact minimum-cost perfect matching of `vertices` under the table's
// distances, by dynamic programming over subsets. Throws
// kTooManyOddVertices above `max_vertices` and kInvalidArgument for an odd
// count.
Matching MinWeightPerfectMatching(std::span<const NodeId> vertices,
                                  const ShortestPathTable& table,
                                  int max_vertices = kMaxExactMatchingVertices);

// Every edge doubled. Throws kInvalidArgument for a disconnected graph.
MultiGraph DuplicateAll(const Graph& g);

struct PostmanAugmentation {
  MultiGraph multigraph;
  Matching matching;
};

// Minimum-length Eulerian supergraph: the odd-degree nodes are matched at
// minimum total distance and every edge on each matched shortest path gains a
// copy. An edge that would be added twice is left single instead, which keeps
// parities and multiplicities <= 2. Throws kInvalidArgument for a
// disconnected graph.
PostmanAugmentation CppAugmentDetailed(const Graph& g);
inline MultiGraph CppAugment(const Graph& g) {
  return CppAugmentDetailed(g).multigraph;
}

// Eulerian cycles of the duplicated / postman multigraph. Without a selector
// Hierholzer's algorithm is used, otherwise Fleury's with that selector.
EulerCycle DupScheme(const Graph& g, NodeId start = 0);
EulerCycle DupScheme(const Graph& g, EdgeSelector& selector, NodeId start = 0);
EulerCycle CppScheme(const Graph& g, NodeId start = 0);
EulerCycle CppScheme(const Graph& g, EdgeSelector& selector, NodeId start = 0);

}  // namespace patrol

#endif  // PATROL_POSTMAN_H_
