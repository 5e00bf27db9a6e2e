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


#include "patrol/aoi.h"

#include "patrol/errors.h"

namespace patrol {
namespace {

void CheckGap(double length, double gap) {
  if (!(length > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "edge length must be positive");
  }
  if (gap < 0.0) throw Error(ErrorCode::kNegativeGap, "gap must be >= 0");
}

double IdlePart(double length, double gap) {
  return 0.5 * gap * gap * length + gap * length * length;
}

}  // namespace

double VisitAoiSameDirection(double length, double gap) {
  CheckGap(length, gap);
  return IdlePart(length, gap) + 0.5 * length * length * length;
}

double VisitAoiOppositeDirection(double length, double gap) {
  CheckGap(length, gap);
  return IdlePart(length, gap) + (2.0 / 3.0) * length * length * length;
}

AoiReport EvaluateAoi(const Graph& g, const Route& route) {
  const RouteClassification cls = ClassifyRoute(g, route);
  const std::vector<Step> steps = ResolveSteps(g, route);
  const int m = static_cast<int>(steps.size());

  AoiReport report;
  report.per_edge_accumulated.assign(g.edge_count(), 0.0);
  report.e1_length = cls.e1_length;
  report.e2_length = cls.e2_length;
  for (const Step& s : steps) report.route_length += g.edge(s.edge).length;

  // Position k of the doubled route is steps[k % m].
  double total = 0.0;
  for (int i = m; i < 2 * m; ++i) {
    const Step& current = steps[i % m];
    const double length = g.edge(current.edge).length;
    double gap = 0.0;
    for (int j = i; j >= 1; --j) {
      const Step& previous = steps[(j - 1) % m];
      if (previous.edge != current.edge) {
        gap += g.edge(previous.edge).length;
        continue;
      }
      const double charge = previous.direction == current.direction
                                ? VisitAoiSameDirection(length, gap)
                                : VisitAoiOppositeDirection(length, gap);
      report.per_edge_accumulated[current.edge] += charge;
      total += charge;
      break;
    }
  }
  report.average_aoi = total / report.route_length;
  return report;
}

}  // namespace patrol
