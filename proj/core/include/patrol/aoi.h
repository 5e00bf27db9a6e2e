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


#ifndef PATROL_AOI_H_
#define PATROL_AOI_H_

#include <vector>

#include "patrol/graph.h"
#include "patrol/route.h"

namespace patrol {

// Accumulated age over one edge of length `length` from the end of its
// previous traversal to the end of the current one, when the edge stays idle
// for `gap` and is then re-traversed in the same direction:
//   gap^2 * length / 2 + gap * length^2 + length^3 / 2.
// Throws kNegativeGap for gap < 0.
double VisitAoiSameDirection(double length, double gap);

// As above for a re-traversal in the opposite direction:
//   gap^2 * length / 2 + gap * length^2 + 2 * length^3 / 3.
double VisitAoiOppositeDirection(double length, double gap);

struct AoiReport {
  double average_aoi = 0.0;
  // Age integrated over one period, per edge id.
  std::vector<double> per_edge_accumulated;
  double route_length = 0.0;
  double e1_length = 0.0;  // Edges traversed once.
  double e2_length = 0.0;  // Edges traversed twice.
};

// Exact time-average age of information of the periodic route. Every step of
// the second copy of the doubled route is charged with the polynomial of its
// gap back to the previous traversal of the same edge; the total is divided by
// l(R). Throws the ClassifyRoute errors for routes outside F1.
AoiReport EvaluateAoi(const Graph& g, const Route& route);

inline double AverageAoi(const Graph& g, const Route& route) {
  return EvaluateAoi(g, route).average_aoi;
}

}  // namespace patrol

#endif  // PATROL_AOI_H_
