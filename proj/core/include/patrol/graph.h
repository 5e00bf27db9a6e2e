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


#ifndef PATROL_GRAPH_H_
#define PATROL_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace patrol {

using NodeId = int;
using EdgeId = int;

// Input triple for graph construction.
struct EdgeSpec {
  NodeId u;
  NodeId v;
  double length;
};

// An undirected edge. (u, v) is the canonical orientation used for direction
// bookkeeping; a traversal u -> v is "forward".
struct Edge {
  NodeId u;
  NodeId v;
  double length;
  EdgeId id;

  NodeId Other(NodeId x) const { return x == u ? v : u; }
};

// Simple undirected graph with strictly positive edge lengths. Immutable after
// construction; edge ids are assigned in input order.
class Graph {
 public:
  // Throws Error with kNodeOutOfRange, kSelfLoop, kDuplicateEdge or
  // kNonPositiveLength.
  static Graph Build(int node_count, std::span<const EdgeSpec> edges);
  static Graph Build(int node_count, std::initializer_list<EdgeSpec> edges) {
    return Build(node_count, std::span<const EdgeSpec>(edges.begin(), edges.size()));
  }

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[id]; }

  // Edge ids incident to `v`, in increasing id order.
  std::span<const EdgeId> Incident(NodeId v) const { return incident_[v]; }
  int Degree(NodeId v) const { return static_cast<int>(incident_[v].size()); }

  std::optional<EdgeId> FindEdge(NodeId u, NodeId v) const;

  // Sum of edge lengths, accumulated in edge id order.
  double TotalLength() const;

  std::vector<NodeId> OddVertices() const;

 private:
  Graph() = default;

  int node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  // Dense node_count x node_count lookup; -1 when absent.
  std::vector<EdgeId> pair_index_;
};

bool IsConnected(const Graph& g);

// Connected with all degrees even.
bool IsEulerian(const Graph& g);

inline double TotalLength(const Graph& g) { return g.TotalLength(); }

}  // namespace patrol

#endif  // PATROL_GRAPH_H_
