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


#include "patrol/graph_io.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "patrol/errors.h"

namespace patrol {

using nlohmann::json;

Graph ParseGraphJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("edges")) {
    throw Error(ErrorCode::kParse, "expected object with 'nodes' and 'edges'");
  }
  const json& nodes = doc["nodes"];
  const json& edges = doc["edges"];
  if (!nodes.is_number_integer() || !edges.is_array()) {
    throw Error(ErrorCode::kParse, "'nodes' must be an integer and 'edges' an array");
  }
  std::vector<EdgeSpec> specs;
  specs.reserve(edges.size());
  for (const json& e : edges) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
        !e[1].is_number_integer() || !e[2].is_number()) {
      throw Error(ErrorCode::kParse, "each edge must be [u, v, length]");
    }
    specs.push_back({e[0].get<NodeId>(), e[1].get<NodeId>(), e[2].get<double>()});
  }
  return Graph::Build(nodes.get<int>(), specs);
}

Graph ReadGraphFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseGraphJson(buffer.str());
}

std::string FormatDouble(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string GraphToJson(const Graph& g) {
  std::string out = "{\"nodes\": " + std::to_string(g.node_count()) +
                    ", \"edges\": [";
  for (const Edge& e : g.edges()) {
    if (e.id > 0) out += ", ";
    out += "[" + std::to_string(e.u) + ", " + std::to_string(e.v) + ", " +
           FormatDouble(e.length) + "]";
  }
  out += "]}\n";
  return out;
}

void WriteGraphFile(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << GraphToJson(g);
}

}  // namespace patrol
