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


#include "patrol/bounds.h"

#include "patrol/errors.h"

namespace patrol {
namespace {

void CheckNonNegative(double e1_length, double e2_length) {
  if (e1_length < 0.0 || e2_length < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "lengths must be non-negative");
  }
}

void CheckTwiceFits(double edge_length, double route_length) {
  // Relative slack for route lengths accumulated in a different order.
  if (!(edge_length > 0.0) ||
      2.0 * edge_length > route_length * (1.0 + 1e-12)) {
    throw Error(ErrorCode::kInvalidArgument,
                "need 0 < 2 * edge_length <= route_length");
  }
}

}  // namespace

double LowerBoundGlobal(double total_length) {
  return 0.5 * total_length * total_length;
}

double LowerBoundF1(double e1_length, double e2_length) {
  CheckNonNegative(e1_length, e2_length);
  return 0.5 * e1_length * e1_length + 1.25 * e1_length * e2_length +
         0.5 * e2_length * e2_length;
}

double UpperBoundF1(double e1_length, double e2_length) {
  CheckNonNegative(e1_length, e2_length);
  return 0.5 * e1_length * e1_length + 1.5 * e1_length * e2_length +
         e2_length * e2_length;
}

double PerEdgeLower(double edge_length, double route_length) {
  CheckTwiceFits(edge_length, route_length);
  return 0.25 * edge_length * route_length * route_length;
}

double PerEdgeUpper(double edge_length, double route_length) {
  CheckTwiceFits(edge_length, route_length);
  const double l = edge_length;
  return (4.0 / 3.0) * l * l * l - route_length * l * l +
         0.5 * l * route_length * route_length;
}

BoundsReport ComputeBounds(const Graph& g, const Route& route) {
  const RouteClassification cls = ClassifyRoute(g, route);
  BoundsReport out;
  out.global_lower = LowerBoundGlobal(g);
  out.f1_lower = LowerBoundF1(cls.e1_length, cls.e2_length);
  out.f1_upper = UpperBoundF1(cls.e1_length, cls.e2_length);
  return out;
}

}  // namespace patrol
