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


#ifndef PATROL_GRAPH_IO_H_
#define PATROL_GRAPH_IO_H_

#include <string>
#include <string_view>

#include "patrol/graph.h"

namespace patrol {

// {"nodes": N, "edges": [[u, v, length], ...]}; edge ids follow array order.
// Throws kParse on malformed JSON and the Graph::Build errors on bad content.
Graph ParseGraphJson(std::string_view text);
Graph ReadGraphFile(const std::string& path);

// Lengths are written with 17 significant digits so they read back exactly.
std::string GraphToJson(const Graph& g);
void WriteGraphFile(const Graph& g, const std::string& path);

// "%.17g" formatting shared by every writer in the project.
std::string FormatDouble(double value);

}  // namespace patrol

#endif  // PATROL_GRAPH_IO_H_
