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


#ifndef PATROL_BOUNDS_H_
#define PATROL_BOUNDS_H_

#include "patrol/graph.h"
#include "patrol/route.h"

namespace patrol {

// Lower bound for every patrol policy on a connected graph: l(E)^2 / 2.
double LowerBoundGlobal(double total_length);
inline double LowerBoundGlobal(const Graph& g) {
  return LowerBoundGlobal(g.TotalLength());
}

// Lower bound over routes that traverse edges of total length `e1_length`
// once and `e2_length` twice:
//   e1^2 / 2 + 5/4 * e1 * e2 + e2^2 / 2.
double LowerBoundF1(double e1_length, double e2_length);

// Matching upper bound: e1^2 / 2 + 3/2 * e1 * e2 + e2^2.
double UpperBoundF1(double e1_length, double e2_length);

// Per-period accumulated age of an edge traversed twice in a route of length
// `route_length`, bracketed by evenly spaced same-direction visits
// (l_e * l_R^2 / 4) and adjacent opposite-direction visits
// (4/3 l_e^3 - l_R l_e^2 + l_e l_R^2 / 2). Both require
// 2 * edge_length <= route_length (kInvalidArgument otherwise).
double PerEdgeLower(double edge_length, double route_length);
double PerEdgeUpper(double edge_length, double route_length);

struct BoundsReport {
  double global_lower = 0.0;
  double f1_lower = 0.0;
  double f1_upper = 0.0;
};

// The three bounds for the route's own E1 / E2 split. Throws the
// ClassifyRoute errors.
BoundsReport ComputeBounds(const Graph& g, const Route& route);

}  // namespace patrol

#endif  // PATROL_BOUNDS_H_
