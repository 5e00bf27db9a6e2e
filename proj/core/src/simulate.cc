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


#include "patrol/simulate.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "patrol/errors.h"

namespace patrol {
namespace {

struct PassEvent {
  double coordinate;  // Route-length position within one period.
  int point;
};

}  // namespace

double SimulateAoi(const Graph& g, const Route& route,
                   const SimulationOptions& options) {
  if (!(options.dx > 0.0) || !(options.dt > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "dx and dt must be positive");
  }
  if (options.warmup_periods < 2 || options.measure_periods < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "need warmup_periods >= 2 and measure_periods >= 1");
  }
  double min_length = INFINITY;
  for (const Edge& e : g.edges()) min_length = std::min(min_length, e.length);
  if (options.dt > min_length / 4.0) {
    throw Error(ErrorCode::kStepTooCoarse,
                "dt exceeds a quarter of the shortest edge");
  }

  const std::vector<Step> steps = ResolveSteps(g, route);
  std::vector<char> covered(g.edge_count(), 0);
  for (const Step& s : steps) covered[s.edge] = 1;
  if (std::find(covered.begin(), covered.end(), 0) != covered.end()) {
    throw Error(ErrorCode::kInvalidArgument, "route must traverse every edge");
  }

  // Sample cells.
  std::vector<int> first_point(g.edge_count());
  std::vector<int> cells(g.edge_count());
  std::vector<double> weight;
  for (const Edge& e : g.edges()) {
    const int k = std::max(1, static_cast<int>(std::ceil(e.length / options.dx - 1e-9)));
    first_point[e.id] = static_cast<int>(weight.size());
    cells[e.id] = k;
    weight.insert(weight.end(), k, e.length / k);
  }

  std::vector<PassEvent> events;
  double period = 0.0;
  for (const Step& s : steps) {
    const Edge& e = g.edge(s.edge);
    const int k = cells[e.id];
    const double w = e.length / k;
    for (int i = 0; i < k; ++i) {
      const double offset = (i + 0.5) * w;
      const double along =
          s.direction == Direction::kForward ? offset : e.length - offset;
      events.push_back({period + along, first_point[e.id] + i});
    }
    period += e.length;
  }
  std::stable_sort(events.begin(), events.end(),
                   [](const PassEvent& a, const PassEvent& b) {
                     return a.coordinate < b.coordinate;
                   });

  const long steps_per_period =
      std::max(1L, static_cast<long>(std::ceil(period / options.dt - 1e-9)));
  const double h = period / static_cast<double>(steps_per_period);
  double total_weight = 0.0;
  for (double w : weight) total_weight += w;

  std::vector<double> last_visit(weight.size(), 0.0);
  double weighted_last_visit = 0.0;  // Sum of weight * last_visit.
  double integral = 0.0;
  const int periods = options.warmup_periods + options.measure_periods;
  for (int p = 0; p < periods; ++p) {
    const bool measuring = p >= options.warmup_periods;
    size_t next_event = 0;
    // Resynchronise the running sum once per period to stop drift.
    weighted_last_visit = 0.0;
    for (size_t i = 0; i < weight.size(); ++i) {
      weighted_last_visit += weight[i] * last_visit[i];
    }
    for (long n = 0; n < steps_per_period; ++n) {
      const double t0 = p * period + static_cast<double>(n) * h;
      const double t1 = t0 + h;
      if (measuring) {
        integral += h * (total_weight * (t0 + 0.5 * h) - weighted_last_visit);
      }
      const bool last_step = n + 1 == steps_per_period;
      const double step_end = static_cast<double>(n + 1) * h;
      while (next_event < events.size() &&
             (last_step || events[next_event].coordinate < step_end)) {
        const int pt = events[next_event].point;
        weighted_last_visit += weight[pt] * (t1 - last_visit[pt]);
        last_visit[pt] = t1;
        ++next_event;
      }
    }
  }
  return integral / (options.measure_periods * period);
}

}  // namespace patrol
