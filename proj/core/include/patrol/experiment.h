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


#ifndef PATROL_EXPERIMENT_H_
#define PATROL_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "patrol/random_graph.h"

namespace patrol {

enum class Algorithm { kRandDup, kHeuDup, kRandCpp, kHeuCpp };

std::string_view AlgorithmName(Algorithm algorithm);
std::optional<Algorithm> ParseAlgorithm(std::string_view name);
// Comma-separated names; throws kParse on an unknown one.
std::vector<Algorithm> ParseAlgorithmList(std::string_view list);

struct ExperimentConfig {
  int n = 10;
  double p = 0.2;
  int graph_count = 200;
  RngSeed seed{1};
  std::vector<Algorithm> algorithms = {Algorithm::kRandDup, Algorithm::kHeuDup,
                                       Algorithm::kRandCpp, Algorithm::kHeuCpp};
  int random_trials_per_graph = 1;
  double length_low = 0.0;
  double length_high = 10.0;
  int max_attempts = 10000;
};

// Throws kInvalidArgument on an unusable configuration.
void ValidateConfig(const ExperimentConfig& config);

struct ResultRow {
  int graph_id = 0;
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;  // Seed that regenerates this graph.
  int edge_count = 0;
  double total_length = 0.0;
  double lower_bound = 0.0;
  Algorithm algorithm = Algorithm::kHeuCpp;
  double aoi = 0.0;
  double ratio = 0.0;
  double route_length = 0.0;
  double elapsed_ms = 0.0;
};

struct GenerationFailure {
  int graph_id = 0;
  std::uint64_t seed = 0;
  std::string message;
};

struct ExperimentResult {
  std::vector<ResultRow> rows;
  std::vector<GenerationFailure> failures;
};

// Graph i is generated from DeriveSeed(config.seed, i); heuristic algorithms
// run once per graph and random ones random_trials_per_graph times with
// seeds derived from the graph seed. Rows come out in (graph, algorithm
// order, trial) order; graphs whose generation budget runs out are reported in
// `failures` and skipped. Every route is re-validated before its row is kept.
ExperimentResult RunExperiment(const ExperimentConfig& config);

inline constexpr std::string_view kCsvHeader =
    "graph_id,n,p,seed,edge_count,total_length,lower_bound,algorithm,aoi,"
    "ratio,route_length,elapsed_ms";

std::string FormatCsvRow(const ResultRow& row);
// Header, then rows and one placeholder row per failure, by graph id.
void WriteCsv(std::ostream& out, const ExperimentResult& result);

struct AlgorithmSummary {
  Algorithm algorithm;
  std::size_t count = 0;
  double mean = 0.0;
  double median = 0.0;
  double p95 = 0.0;
};

// Ratio statistics per algorithm, in first-appearance order. Quantiles use
// linear interpolation between order statistics. Throws kInvalidArgument for
// an empty input.
std::vector<AlgorithmSummary> Summarize(std::span<const ResultRow> rows);

// Linear-interpolation quantile of unsorted values, q in [0, 1].
double Quantile(std::vector<double> values, double q);

}  // namespace patrol

#endif  // PATROL_EXPERIMENT_H_
