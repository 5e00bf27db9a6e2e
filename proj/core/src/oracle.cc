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


#include "patrol/oracle.h"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "patrol/aoi.h"
#include "patrol/bounds.h"
#include "patrol/errors.h"
#include "patrol/euler.h"
#include "patrol/heuristic.h"
#include "patrol/postman.h"

namespace patrol {
namespace {

constexpr double kRatioSlack = 1e-9;

// Backtracking over node sequences; copies of one edge are interchangeable,
// so the walk tracks remaining traversals per base edge.
class CycleSearch {
 public:
  CycleSearch(const MultiGraph& mg, const OracleOptions& options,
              std::uint64_t& states)
      : g_(mg.base()),
        options_(options),
        states_(states),
        left_(mg.multiplicities()),
        steps_left_(mg.copy_count()) {
    nodes_.push_back(0);
  }

  SearchResult Run() {
    best_.aoi = std::numeric_limits<double>::infinity();
    Extend(0);
    best_.states_visited = states_;
    return best_;
  }

 private:
  void Extend(NodeId v) {
    if (++states_ > options_.max_states) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "exhaustive search exceeded " +
                      std::to_string(options_.max_states) + " states");
    }
    if (steps_left_ == 0) {
      if (v == 0 && IsCanonicalRotation()) Evaluate();
      return;
    }
    for (EdgeId id : g_.Incident(v)) {
      if (left_[id] == 0) continue;
      const NodeId w = g_.edge(id).Other(v);
      --left_[id];
      --steps_left_;
      nodes_.push_back(w);
      Extend(w);
      nodes_.pop_back();
      ++steps_left_;
      ++left_[id];
    }
  }

  // Among rotations that also start at node 0, only the lexicographically
  // smallest is evaluated; rotation does not change the time average.
  bool IsCanonicalRotation() const {
    const int m = static_cast<int>(nodes_.size()) - 1;
    for (int shift = 1; shift < m; ++shift) {
      if (nodes_[shift] != 0) continue;
      for (int i = 0; i < m; ++i) {
        const NodeId a = nodes_[i];
        const NodeId b = nodes_[(i + shift) % m];
        if (b < a) return false;
        if (a < b) break;
      }
    }
    return true;
  }

  void Evaluate() {
    Route route(nodes_);
    const double aoi = AverageAoi(g_, route);
    ++best_.cycles_evaluated;
    if (aoi < best_.aoi) {
      best_.aoi = aoi;
      best_.route = std::move(route);
    }
  }

  const Graph& g_;
  const OracleOptions& options_;
  std::uint64_t& states_;
  std::vector<int> left_;
  int steps_left_;
  std::vector<NodeId> nodes_;
  SearchResult best_;
};

std::uint64_t PowerOfTwo(long exponent) {
  if (exponent < 0 || exponent > 62) {
    throw Error(ErrorCode::kInvalidArgument,
                "count bound exponent " + std::to_string(exponent) +
                    " outside [0, 62]");
  }
  return std::uint64_t{1} << exponent;
}

}  // namespace

std::vector<MultiGraph> EnumerateF1Multigraphs(const Graph& g, int max_edges) {
  if (g.edge_count() > max_edges || g.edge_count() > 30) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::to_string(g.edge_count()) +
                    " edges are too many for subset enumeration");
  }
  if (!IsConnected(g)) {
    throw Error(ErrorCode::kInvalidArgument, "graph must be connected");
  }
  std::vector<char> odd(g.node_count(), 0);
  for (NodeId v = 0; v < g.node_count(); ++v) odd[v] = g.Degree(v) % 2;

  std::vector<MultiGraph> out;
  const std::uint32_t subsets = 1u << g.edge_count();
  std::vector<char> parity(g.node_count());
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    parity = odd;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (mask & (1u << e)) {
        parity[g.edge(e).u] ^= 1;
        parity[g.edge(e).v] ^= 1;
      }
    }
    if (std::find(parity.begin(), parity.end(), 1) != parity.end()) continue;
    std::vector<int> multiplicity(g.edge_count(), 1);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (mask & (1u << e)) multiplicity[e] = 2;
    }
    out.emplace_back(g, std::move(multiplicity));
  }
  return out;
}

SearchResult BestCycle(const MultiGraph& mg, const OracleOptions& options) {
  if (!IsEulerian(mg)) {
    throw Error(ErrorCode::kNotEulerian,
                "multigraph is disconnected or has odd-degree nodes");
  }
  std::uint64_t states = 0;
  return CycleSearch(mg, options, states).Run();
}

SearchResult OptimalF1(const Graph& g, const OracleOptions& options) {
  SearchResult best;
  best.aoi = std::numeric_limits<double>::infinity();
  std::uint64_t states = 0;
  std::uint64_t cycles = 0;
  for (const MultiGraph& mg : EnumerateF1Multigraphs(g, options.max_edges)) {
    SearchResult r = CycleSearch(mg, options, states).Run();
    cycles += r.cycles_evaluated;
    if (r.aoi < best.aoi) best = std::move(r);
  }
  best.cycles_evaluated = cycles;
  best.states_visited = states;
  return best;
}

std::uint64_t CountBound(const MultiGraph& mg) {
  return PowerOfTwo(1L - mg.node_count() + mg.copy_count());
}

std::uint64_t CountBound(const Graph& g) {
  return PowerOfTwo(1L - g.node_count() + 2L * g.edge_count());
}

RatioReport VerifyRatios(const Graph& g, RngSeed seed,
                         const OracleOptions& options) {
  RatioReport report;
  report.optimum = OptimalF1(g, options);
  report.lower_bound = LowerBoundGlobal(g);

  RandomSelector rand_dup(DeriveSeed(seed, 0));
  RandomSelector rand_cpp(DeriveSeed(seed, 1));
  const std::vector<std::pair<std::string, Route>> routes = {
      {"dup", DupScheme(g).route},
      {"cpp", CppScheme(g).route},
      {"heu_dup", HeuristicRoute(g, BaseMultigraph::kDuplicate).route},
      {"heu_cpp", HeuristicRoute(g, BaseMultigraph::kPostman).route},
      {"rand_dup", DupScheme(g, rand_dup).route},
      {"rand_cpp", CppScheme(g, rand_cpp).route},
  };
  report.all_within_bound = true;
  for (const auto& [name, route] : routes) {
    SchemeRatio s;
    s.scheme = name;
    s.route = route;
    s.aoi = AverageAoi(g, route);
    s.ratio_to_optimum = s.aoi / report.optimum.aoi;
    s.ratio_to_lower_bound = s.aoi / report.lower_bound;
    s.within_bound = s.ratio_to_optimum <= 2.0 + kRatioSlack &&
                     s.ratio_to_lower_bound <= 2.0 + kRatioSlack;
    report.all_within_bound = report.all_within_bound && s.within_bound;
    report.schemes.push_back(std::move(s));
  }
  return report;
}

}  // namespace patrol
