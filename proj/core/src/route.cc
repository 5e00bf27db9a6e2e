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


#include "patrol/route.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

#include "patrol/errors.h"

namespace patrol {

Route Route::Rotated(int k) const {
  const int m = step_count();
  if (m == 0) return *this;
  k = ((k % m) + m) % m;
  std::vector<NodeId> out;
  out.reserve(nodes_.size());
  for (int i = 0; i <= m; ++i) out.push_back(nodes_[(k + i) % m]);
  return Route(std::move(out));
}

Route Route::Reversed() const {
  std::vector<NodeId> out(nodes_.rbegin(), nodes_.rend());
  return Route(std::move(out));
}

Route ParseRoute(std::string_view text) {
  std::vector<NodeId> nodes;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) {
      token.remove_prefix(1);
    }
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) {
      token.remove_suffix(1);
    }
    NodeId id = 0;
    const auto [end, ec] =
        std::from_chars(token.data(), token.data() + token.size(), id);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
      throw Error(ErrorCode::kParse,
                  "bad node id '" + std::string(token) + "' in route");
    }
    nodes.push_back(id);
    pos = comma + 1;
  }
  return Route(std::move(nodes));
}

std::string FormatRoute(const Route& route) {
  std::string out;
  for (size_t i = 0; i < route.nodes().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(route.nodes()[i]);
  }
  return out;
}

std::vector<Step> ResolveSteps(const Graph& g, const Route& route) {
  const std::vector<NodeId>& r = route.nodes();
  if (r.size() < 2 || r.front() != r.back()) {
    throw Error(ErrorCode::kNotClosedWalk,
                "route must have at least one step and end where it starts");
  }
  std::vector<Step> steps;
  steps.reserve(r.size() - 1);
  for (size_t i = 0; i + 1 < r.size(); ++i) {
    const std::optional<EdgeId> e = g.FindEdge(r[i], r[i + 1]);
    if (!e) {
      throw Error(ErrorCode::kNotAWalk, "no edge between " +
                                            std::to_string(r[i]) + " and " +
                                            std::to_string(r[i + 1]));
    }
    const Direction dir =
        g.edge(*e).u == r[i] ? Direction::kForward : Direction::kBackward;
    steps.push_back(Step{*e, dir});
  }
  return steps;
}

double RouteLength(const Graph& g, const Route& route) {
  double total = 0.0;
  for (const Step& s : ResolveSteps(g, route)) total += g.edge(s.edge).length;
  return total;
}

RouteClassification ClassifyRoute(const Graph& g, const Route& route) {
  RouteClassification out;
  out.traversals.assign(g.edge_count(), 0);
  for (const Step& s : ResolveSteps(g, route)) ++out.traversals[s.edge];
  for (const Edge& e : g.edges()) {
    const int count = out.traversals[e.id];
    if (count == 1) {
      out.once.push_back(e.id);
      out.e1_length += e.length;
    } else if (count == 2) {
      out.twice.push_back(e.id);
      out.e2_length += e.length;
    } else {
      throw Error(ErrorCode::kNotInF1,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") traversed " + std::to_string(count) + " times");
    }
  }
  return out;
}

VisitSchedule BuildVisitSchedule(const Graph& g, const Route& route) {
  VisitSchedule schedule;
  schedule.visits.resize(g.edge_count());
  double clock = 0.0;
  for (const Step& s : ResolveSteps(g, route)) {
    schedule.visits[s.edge].push_back(Visit{clock, s.direction});
    clock += g.edge(s.edge).length;
  }
  schedule.period = clock;
  return schedule;
}

}  // namespace patrol
