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


#include "patrol/postman.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "patrol/errors.h"

namespace patrol {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTieTolerance = 1e-12;

bool NearlyEqual(double a, double b) {
  if (a == b) return true;
  return std::abs(a - b) <= kTieTolerance * std::max(std::abs(a), std::abs(b));
}

// Lexicographic (distance, hops) with tolerant distance ties.
bool Shorter(double d1, int h1, double d2, int h2) {
  if (NearlyEqual(d1, d2)) return h1 < h2;
  return d1 < d2;
}

void RequireConnected(const Graph& g) {
  if (!IsConnected(g)) {
    throw Error(ErrorCode::kInvalidArgument, "graph must be connected");
  }
}

}  // namespace

ShortestPathTable::ShortestPathTable(const Graph& g) : n_(g.node_count()) {
  const size_t cells = static_cast<size_t>(n_) * n_;
  dist_.assign(cells, kInf);
  hops_.assign(cells, std::numeric_limits<int>::max() / 4);
  next_hop_.assign(cells, -1);
  for (NodeId v = 0; v < n_; ++v) {
    dist_[Index(v, v)] = 0.0;
    hops_[Index(v, v)] = 0;
  }
  for (const Edge& e : g.edges()) {
    dist_[Index(e.u, e.v)] = dist_[Index(e.v, e.u)] = e.length;
    hops_[Index(e.u, e.v)] = hops_[Index(e.v, e.u)] = 1;
  }
  for (NodeId k = 0; k < n_; ++k) {
    for (NodeId i = 0; i < n_; ++i) {
      if (dist_[Index(i, k)] == kInf) continue;
      for (NodeId j = 0; j < n_; ++j) {
        const double d = dist_[Index(i, k)] + dist_[Index(k, j)];
        const int h = hops_[Index(i, k)] + hops_[Index(k, j)];
        if (Shorter(d, h, dist_[Index(i, j)], hops_[Index(i, j)])) {
          dist_[Index(i, j)] = d;
          hops_[Index(i, j)] = h;
        }
      }
    }
  }
  // Smallest-id first step that stays on a best path; following next hops
  // from s then yields the lexicographically smallest best path.
  for (NodeId s = 0; s < n_; ++s) {
    for (NodeId t = 0; t < n_; ++t) {
      if (s == t || dist_[Index(s, t)] == kInf) continue;
      NodeId best = -1;
      double best_d = kInf;
      int best_h = 0;
      for (EdgeId id : g.Incident(s)) {
        const Edge& e = g.edge(id);
        const NodeId y = e.Other(s);
        const double d = e.length + dist_[Index(y, t)];
        const int h = 1 + hops_[Index(y, t)];
        if (best < 0 || Shorter(d, h, best_d, best_h) ||
            (!Shorter(best_d, best_h, d, h) && y < best)) {
          best = y;
          best_d = d;
          best_h = h;
        }
      }
      next_hop_[Index(s, t)] = best;
    }
  }
}

std::vector<NodeId> ShortestPathTable::Path(NodeId s, NodeId t) const {
  if (dist_[Index(s, t)] == kInf) {
    throw Error(ErrorCode::kInvalidArgument, "nodes are not connected");
  }
  std::vector<NodeId> path = {s};
  while (path.back() != t) {
    path.push_back(next_hop_[Index(path.back(), t)]);
    if (static_cast<int>(path.size()) > n_) {
      throw Error(ErrorCode::kInvalidArgument, "shortest path table is inconsistent");
    }
  }
  return path;
}

Matching MinWeightPerfectMatching(std::span<const NodeId> vertices,
                                  const ShortestPathTable& table,
                                  int max_vertices) {
  const int k = static_cast<int>(vertices.size());
  if (k % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument, "need an even number of vertices");
  }
  if (k > max_vertices) {
    throw Error(ErrorCode::kTooManyOddVertices,
                std::to_string(k) + " vertices exceed the exact cap of " +
                    std::to_string(max_vertices));
  }
  const std::uint32_t full = k == 0 ? 0u : (1u << k) - 1u;
  std::vector<double> cost(static_cast<size_t>(full) + 1, kInf);
  std::vector<std::uint32_t> via(static_cast<size_t>(full) + 1, 0);
  cost[0] = 0.0;
  // cost[mask]: cheapest matching of the vertices in `mask`, built by always
  // pairing the lowest unmatched vertex.
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (cost[mask] == kInf) continue;
    int i = 0;
    while (mask & (1u << i)) ++i;
    for (int j = i + 1; j < k; ++j) {
      if (mask & (1u << j)) continue;
      const std::uint32_t next = mask | (1u << i) | (1u << j);
      const double c = cost[mask] + table.Dist(vertices[i], vertices[j]);
      if (c < cost[next]) {
        cost[next] = c;
        via[next] = mask;
      }
    }
  }
  Matching out;
  for (std::uint32_t mask = full; mask != 0; mask = via[mask]) {
    const std::uint32_t pair = mask & ~via[mask];
    int a = -1;
    int b = -1;
    for (int i = 0; i < k; ++i) {
      if (pair & (1u << i)) (a < 0 ? a : b) = i;
    }
    out.pairs.emplace_back(vertices[a], vertices[b]);
    out.total_cost += table.Dist(vertices[a], vertices[b]);
  }
  std::reverse(out.pairs.begin(), out.pairs.end());
  return out;
}

MultiGraph DuplicateAll(const Graph& g) {
  RequireConnected(g);
  return MultiGraph(g, std::vector<int>(g.edge_count(), 2));
}

PostmanAugmentation CppAugmentDetailed(const Graph& g) {
  RequireConnected(g);
  const ShortestPathTable table(g);
  const std::vector<NodeId> odd = g.OddVertices();
  Matching matching = MinWeightPerfectMatching(odd, table);
  std::vector<int> added(g.edge_count(), 0);
  for (const auto& [a, b] : matching.pairs) {
    const std::vector<NodeId> path = table.Path(a, b);
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      ++added[*g.FindEdge(path[i], path[i + 1])];
    }
  }
  std::vector<int> multiplicity(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    multiplicity[e] = 1 + added[e] % 2;
  }
  return PostmanAugmentation{MultiGraph(g, std::move(multiplicity)),
                             std::move(matching)};
}

EulerCycle DupScheme(const Graph& g, NodeId start) {
  return Hierholzer(DuplicateAll(g), start);
}

EulerCycle DupScheme(const Graph& g, EdgeSelector& selector, NodeId start) {
  return Fleury(DuplicateAll(g), start, selector);
}

EulerCycle CppScheme(const Graph& g, NodeId start) {
  return Hierholzer(CppAugment(g), start);
}

EulerCycle CppScheme(const Graph& g, EdgeSelector& selector, NodeId start) {
  return Fleury(CppAugment(g), start, selector);
}

}  // namespace patrol
