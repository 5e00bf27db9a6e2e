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


#include "patrol/report_io.h"

#include "json.hpp"

namespace patrol {

using nlohmann::ordered_json;

std::string AoiReportToJson(const Graph& g, const AoiReport& report) {
  ordered_json doc;
  doc["average_aoi"] = report.average_aoi;
  doc["route_length"] = report.route_length;
  doc["e1_length"] = report.e1_length;
  doc["e2_length"] = report.e2_length;
  ordered_json per_edge = ordered_json::array();
  for (const Edge& e : g.edges()) {
    per_edge.push_back({{"u", e.u},
                        {"v", e.v},
                        {"accumulated", report.per_edge_accumulated[e.id]}});
  }
  doc["per_edge"] = std::move(per_edge);
  return doc.dump();
}

std::string BoundsReportToJson(const BoundsReport& bounds) {
  ordered_json doc;
  doc["global_lower"] = bounds.global_lower;
  doc["f1_lower"] = bounds.f1_lower;
  doc["f1_upper"] = bounds.f1_upper;
  return doc.dump();
}

}  // namespace patrol
