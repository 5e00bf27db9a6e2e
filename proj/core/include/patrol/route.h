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


#ifndef PATROL_ROUTE_H_
#define PATROL_ROUTE_H_

#include <string>
#include <string_view>
#include <vector>

#include "patrol/graph.h"

namespace patrol {

// A periodic patrol route: the closed node sequence R[0..M] with
// R[0] == R[M]. Validity against a particular graph is checked by the
// functions below, not by the constructor.
class Route {
 public:
  Route() = default;
  explicit Route(std::vector<NodeId> nodes) : nodes_(std::move(nodes)) {}

  const std::vector<NodeId>& nodes() const { return nodes_; }
  // M, the number of edge traversals per period.
  int step_count() const {
    return nodes_.empty() ? 0 : static_cast<int>(nodes_.size()) - 1;
  }

  // Same cyclic walk started `k` steps later. Requires a closed route.
  Route Rotated(int k) const;
  // Same cycle walked backwards.
  Route Reversed() const;

  friend bool operator==(const Route&, const Route&) = default;

 private:
  std::vector<NodeId> nodes_;
};

// Parses "0,1,2,0" (whitespace around ids allowed). Throws kParse.
Route ParseRoute(std::string_view text);
std::string FormatRoute(const Route& route);

enum class Direction { kForward, kBackward };

// One traversal of a route: the edge and whether it runs along the edge's
// canonical (u, v) orientation.
struct Step {
  EdgeId edge;
  Direction direction;
};

// Resolves consecutive node pairs to edges. Throws kNotClosedWalk when the
// route has no steps or R[0] != R[M], and kNotAWalk for a non-adjacent pair.
std::vector<Step> ResolveSteps(const Graph& g, const Route& route);

// l(R), summed in step order.
double RouteLength(const Graph& g, const Route& route);

// Traversal counts of a closed walk and the E1 / E2 split.
struct RouteClassification {
  std::vector<int> traversals;  // Indexed by edge id.
  std::vector<EdgeId> once;     // E1
  std::vector<EdgeId> twice;    // E2
  double e1_length = 0.0;
  double e2_length = 0.0;
};

// Throws the ResolveSteps errors, and kNotInF1 if some edge is traversed
// zero times or more than twice.
RouteClassification ClassifyRoute(const Graph& g, const Route& route);

struct Visit {
  double start;
  Direction direction;
};

// Visit start times of every edge within one period [0, period), the route
// starting at R[0] at time 0 and moving at unit speed.
struct VisitSchedule {
  double period = 0.0;
  std::vector<std::vector<Visit>> visits;  // Indexed by edge id.
};

VisitSchedule BuildVisitSchedule(const Graph& g, const Route& route);

}  // namespace patrol

#endif  // PATROL_ROUTE_H_
