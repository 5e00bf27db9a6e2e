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


#include "patrol/experiment.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>

#include "patrol/aoi.h"
#include "patrol/bounds.h"
#include "patrol/errors.h"
#include "patrol/euler.h"
#include "patrol/graph_io.h"
#include "patrol/heuristic.h"
#include "patrol/postman.h"
#include "patrol/route.h"

namespace patrol {
namespace {

constexpr Algorithm kAllAlgorithms[] = {Algorithm::kRandDup, Algorithm::kHeuDup,
                                        Algorithm::kRandCpp, Algorithm::kHeuCpp};

bool IsRandom(Algorithm a) {
  return a == Algorithm::kRandDup || a == Algorithm::kRandCpp;
}

EulerCycle Plan(const Graph& g, Algorithm algorithm, RngSeed trial_seed) {
  switch (algorithm) {
    case Algorithm::kHeuDup:
      return HeuristicRoute(g, BaseMultigraph::kDuplicate);
    case Algorithm::kHeuCpp:
      return HeuristicRoute(g, BaseMultigraph::kPostman);
    case Algorithm::kRandDup: {
      RandomSelector selector(trial_seed);
      return DupScheme(g, selector);
    }
    case Algorithm::kRandCpp: {
      RandomSelector selector(trial_seed);
      return CppScheme(g, selector);
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown algorithm");
}

// Multiplicities the route must reproduce.
std::vector<int> ExpectedTraversals(const Graph& g, Algorithm algorithm) {
  if (algorithm == Algorithm::kRandDup || algorithm == Algorithm::kHeuDup) {
    return std::vector<int>(g.edge_count(), 2);
  }
  return CppAugment(g).multiplicities();
}

}  // namespace

std::string_view AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kRandDup: return "rand_dup";
    case Algorithm::kHeuDup: return "heu_dup";
    case Algorithm::kRandCpp: return "rand_cpp";
    case Algorithm::kHeuCpp: return "heu_cpp";
  }
  return "unknown";
}

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  for (Algorithm a : kAllAlgorithms) {
    if (AlgorithmName(a) == name) return a;
  }
  return std::nullopt;
}

std::vector<Algorithm> ParseAlgorithmList(std::string_view list) {
  std::vector<Algorithm> out;
  size_t pos = 0;
  while (pos <= list.size()) {
    size_t comma = list.find(',', pos);
    if (comma == std::string_view::npos) comma = list.size();
    std::string_view name = list.substr(pos, comma - pos);
    while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
    while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
    const std::optional<Algorithm> a = ParseAlgorithm(name);
    if (!a) {
      throw Error(ErrorCode::kParse, "unknown algorithm '" + std::string(name) + "'");
    }
    out.push_back(*a);
    pos = comma + 1;
  }
  return out;
}

void ValidateConfig(const ExperimentConfig& config) {
  if (config.graph_count < 1) {
    throw Error(ErrorCode::kInvalidArgument, "graph_count must be >= 1");
  }
  if (config.algorithms.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no algorithms selected");
  }
  if (!(config.p > 0.0 && config.p < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "p must lie in (0, 1)");
  }
  if (config.n < 3) throw Error(ErrorCode::kInvalidArgument, "n must be >= 3");
  if (config.random_trials_per_graph < 1) {
    throw Error(ErrorCode::kInvalidArgument, "random trials must be >= 1");
  }
}

ExperimentResult RunExperiment(const ExperimentConfig& config) {
  ValidateConfig(config);
  const ErOptions er{config.n, config.p, config.length_low, config.length_high,
                     true, true, config.max_attempts};
  ExperimentResult result;
  for (int graph_id = 0; graph_id < config.graph_count; ++graph_id) {
    const RngSeed graph_seed = DeriveSeed(config.seed, graph_id);
    std::optional<Graph> g;
    try {
      g = GenerateEr(er, graph_seed);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kGenerationBudgetExceeded) throw;
      result.failures.push_back({graph_id, graph_seed.value, e.what()});
      continue;
    }
    const double total_length = g->TotalLength();
    const double lower_bound = LowerBoundGlobal(total_length);
    for (Algorithm algorithm : config.algorithms) {
      const int trials = IsRandom(algorithm) ? config.random_trials_per_graph : 1;
      const RngSeed algorithm_seed =
          DeriveSeed(graph_seed, 1 + static_cast<std::uint64_t>(algorithm));
      const std::vector<int> expected = ExpectedTraversals(*g, algorithm);
      for (int trial = 0; trial < trials; ++trial) {
        const auto start = std::chrono::steady_clock::now();
        const EulerCycle cycle = Plan(*g, algorithm, DeriveSeed(algorithm_seed, trial));
        const AoiReport report = EvaluateAoi(*g, cycle.route);
        const auto stop = std::chrono::steady_clock::now();
        if (ClassifyRoute(*g, cycle.route).traversals != expected) {
          throw Error(ErrorCode::kNotInF1,
                      std::string(AlgorithmName(algorithm)) +
                          " produced a route that does not match its multigraph");
        }
        ResultRow row;
        row.graph_id = graph_id;
        row.n = config.n;
        row.p = config.p;
        row.seed = graph_seed.value;
        row.edge_count = g->edge_count();
        row.total_length = total_length;
        row.lower_bound = lower_bound;
        row.algorithm = algorithm;
        row.aoi = report.average_aoi;
        row.ratio = report.average_aoi / lower_bound;
        row.route_length = report.route_length;
        row.elapsed_ms =
            std::chrono::duration<double, std::milli>(stop - start).count();
        result.rows.push_back(row);
      }
    }
  }
  return result;
}

std::string FormatCsvRow(const ResultRow& row) {
  char elapsed[32];
  std::snprintf(elapsed, sizeof(elapsed), "%.3f", row.elapsed_ms);
  return std::to_string(row.graph_id) + "," + std::to_string(row.n) + "," +
         FormatDouble(row.p) + "," + std::to_string(row.seed) + "," +
         std::to_string(row.edge_count) + "," + FormatDouble(row.total_length) +
         "," + FormatDouble(row.lower_bound) + "," +
         std::string(AlgorithmName(row.algorithm)) + "," +
         FormatDouble(row.aoi) + "," + FormatDouble(row.ratio) + "," +
         FormatDouble(row.route_length) + "," + elapsed;
}

void WriteCsv(std::ostream& out, const ExperimentResult& result) {
  out << kCsvHeader << '\n';
  size_t r = 0;
  size_t f = 0;
  while (r < result.rows.size() || f < result.failures.size()) {
    const bool take_failure =
        f < result.failures.size() &&
        (r == result.rows.size() ||
         result.failures[f].graph_id < result.rows[r].graph_id);
    if (take_failure) {
      const GenerationFailure& failure = result.failures[f++];
      out << failure.graph_id << ",,," << failure.seed
          << ",,,,generation_failed,,,,\n";
    } else {
      out << FormatCsvRow(result.rows[r++]) << '\n';
    }
  }
}

double Quantile(std::vector<double> values, double q) {
  if (values.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "quantile of an empty set");
  }
  std::sort(values.begin(), values.end());
  const double position = q * static_cast<double>(values.size() - 1);
  const size_t lo = static_cast<size_t>(position);
  const size_t hi = std::min(lo + 1, values.size() - 1);
  const double frac = position - static_cast<double>(lo);
  return values[lo] + frac * (values[hi] - values[lo]);
}

std::vector<AlgorithmSummary> Summarize(std::span<const ResultRow> rows) {
  if (rows.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "nothing to summarize");
  }
  std::vector<Algorithm> order;
  std::map<Algorithm, std::vector<double>> ratios;
  for (const ResultRow& row : rows) {
    auto [it, inserted] = ratios.try_emplace(row.algorithm);
    if (inserted) order.push_back(row.algorithm);
    it->second.push_back(row.ratio);
  }
  std::vector<AlgorithmSummary> out;
  for (Algorithm a : order) {
    const std::vector<double>& values = ratios[a];
    AlgorithmSummary s;
    s.algorithm = a;
    s.count = values.size();
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(values.size());
    s.median = Quantile(values, 0.5);
    s.p95 = Quantile(values, 0.95);
    out.push_back(s);
  }
  return out;
}

}  // namespace patrol
