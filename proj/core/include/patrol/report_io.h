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


#ifndef PATROL_REPORT_IO_H_
#define PATROL_REPORT_IO_H_

#include <string>

#include "patrol/aoi.h"
#include "patrol/bounds.h"
#include "patrol/graph.h"

namespace patrol {

// {"average_aoi", "route_length", "e1_length", "e2_length",
//  "per_edge": [{"u", "v", "accumulated"}, ...]} with per_edge in edge id
// order.
std::string AoiReportToJson(const Graph& g, const AoiReport& report);

// {"global_lower", "f1_lower", "f1_upper"}.
std::string BoundsReportToJson(const BoundsReport& bounds);

}  // namespace patrol

#endif  // PATROL_REPORT_IO_H_
