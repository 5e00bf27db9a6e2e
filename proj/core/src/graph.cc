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


#include "patrol/graph.h"

#include <cmath>
#include <string>

#include "patrol/errors.h"

namespace patrol {

Graph Graph::Build(int node_count, std::span<const EdgeSpec> edges) {
  if (node_count <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "node_count must be positive");
  }
  Graph g;
  g.node_count_ = node_count;
  g.incident_.resize(node_count);
  g.pair_index_.assign(static_cast<size_t>(node_count) * node_count, -1);
  g.edges_.reserve(edges.size());
  for (const EdgeSpec& spec : edges) {
    const std::string where = "edge (" + std::to_string(spec.u) + "," +
                              std::to_string(spec.v) + ")";
    if (spec.u < 0 || spec.u >= node_count || spec.v < 0 ||
        spec.v >= node_count) {
      throw Error(ErrorCode::kNodeOutOfRange, where);
    }
    if (spec.u == spec.v) throw Error(ErrorCode::kSelfLoop, where);
    if (!(spec.length > 0.0) || !std::isfinite(spec.length)) {
      throw Error(ErrorCode::kNonPositiveLength, where);
    }
    const size_t key = static_cast<size_t>(spec.u) * node_count + spec.v;
    if (g.pair_index_[key] != -1) throw Error(ErrorCode::kDuplicateEdge, where);
    const EdgeId id = static_cast<EdgeId>(g.edges_.size());
    g.edges_.push_back(Edge{spec.u, spec.v, spec.length, id});
    g.pair_index_[key] = id;
    g.pair_index_[static_cast<size_t>(spec.v) * node_count + spec.u] = id;
    g.incident_[spec.u].push_back(id);
    g.incident_[spec.v].push_back(id);
  }
  return g;
}

std::optional<EdgeId> Graph::FindEdge(NodeId u, NodeId v) const {
  if (u < 0 || u >= node_count_ || v < 0 || v >= node_count_) return std::nullopt;
  const EdgeId id = pair_index_[static_cast<size_t>(u) * node_count_ + v];
  if (id < 0) return std::nullopt;
  return id;
}

double Graph::TotalLength() const {
  double total = 0.0;
  for (const Edge& e : edges_) total += e.length;
  return total;
}

std::vector<NodeId> Graph::OddVertices() const {
  std::vector<NodeId> odd;
  for (NodeId v = 0; v < node_count_; ++v) {
    if (Degree(v) % 2 == 1) odd.push_back(v);
  }
  return odd;
}

bool IsConnected(const Graph& g) {
  if (g.Degree(0) == 0) return false;
  std::vector<char> seen(g.node_count(), 0);
  std::vector<NodeId> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (EdgeId id : g.Incident(v)) {
      const NodeId w = g.edge(id).Other(v);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.node_count();
}

bool IsEulerian(const Graph& g) {
  if (!IsConnected(g)) return false;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.Degree(v) % 2 != 0) return false;
  }
  return true;
}

}  // namespace patrol
