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


// patrol: evaluate, plan and benchmark periodic patrol routes.
//
//   patrol eval   --graph g.json --route 0,1,2,0 [--simulate --dx X --dt T]
//   patrol plan   --graph g.json --scheme heu_cpp [--seed S] [--start V]
//   patrol bench  --n 10 --p 0.2 --graphs 200 --seed 1 [--algs ...] [--out f]
//   patrol oracle --graph g.json [--cap STATES]
//
// Exit codes: 0 ok, 2 invalid input, 3 search or generation budget exhausted.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "patrol/aoi.h"
#include "patrol/bounds.h"
#include "patrol/errors.h"
#include "patrol/euler.h"
#include "patrol/experiment.h"
#include "patrol/graph_io.h"
#include "patrol/heuristic.h"
#include "patrol/oracle.h"
#include "patrol/postman.h"
#include "patrol/report_io.h"
#include "patrol/route.h"
#include "patrol/simulate.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;

using nlohmann::ordered_json;
using namespace patrol;

struct EvalArgs {
  std::string graph;
  std::string route;
  bool simulate = false;
  SimulationOptions sim;
};

struct PlanArgs {
  std::string graph;
  std::string scheme = "heu_cpp";
  std::uint64_t seed = 1;
  NodeId start = 0;
};

struct BenchArgs {
  ExperimentConfig config;
  std::uint64_t seed = 1;
  std::string algs = "rand_dup,heu_dup,rand_cpp,heu_cpp";
  std::string out;
};

struct OracleArgs {
  std::string graph;
  std::uint64_t cap = OracleOptions{}.max_states;
  std::uint64_t seed = 1;
};

int RunEval(const EvalArgs& args) {
  const Graph g = ReadGraphFile(args.graph);
  const Route route = ParseRoute(args.route);
  ordered_json out = ordered_json::parse(AoiReportToJson(g, EvaluateAoi(g, route)));
  if (args.simulate) out["simulated_aoi"] = SimulateAoi(g, route, args.sim);
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

EulerCycle PlanScheme(const Graph& g, const PlanArgs& args) {
  const std::string& s = args.scheme;
  if (s == "dup") return DupScheme(g, args.start);
  if (s == "cpp") return CppScheme(g, args.start);
  if (s == "heu_dup") return HeuristicRoute(g, BaseMultigraph::kDuplicate, args.start);
  if (s == "heu_cpp") return HeuristicRoute(g, BaseMultigraph::kPostman, args.start);
  RandomSelector selector(RngSeed{args.seed});
  if (s == "rand_dup") return DupScheme(g, selector, args.start);
  if (s == "rand_cpp") return CppScheme(g, selector, args.start);
  throw Error(ErrorCode::kInvalidArgument, "unknown scheme " + s);
}

int RunPlan(const PlanArgs& args) {
  const Graph g = ReadGraphFile(args.graph);
  const Route route = PlanScheme(g, args).route;
  ordered_json out;
  out["scheme"] = args.scheme;
  out["route"] = FormatRoute(route);
  out["aoi"] = ordered_json::parse(AoiReportToJson(g, EvaluateAoi(g, route)));
  out["bounds"] = ordered_json::parse(BoundsReportToJson(ComputeBounds(g, route)));
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

int RunBench(BenchArgs args) {
  args.config.seed = RngSeed{args.seed};
  args.config.algorithms = ParseAlgorithmList(args.algs);
  const ExperimentResult result = RunExperiment(args.config);
  for (const GenerationFailure& f : result.failures) {
    std::cerr << "graph " << f.graph_id << " skipped: " << f.message << '\n';
  }
  if (args.out.empty()) {
    WriteCsv(std::cout, result);
  } else {
    std::ofstream file(args.out);
    if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write " + args.out);
    WriteCsv(file, result);
  }
  if (!result.rows.empty()) {
    std::cerr << "algorithm   count  mean_ratio  median_ratio  p95_ratio\n";
    for (const AlgorithmSummary& s : Summarize(result.rows)) {
      char line[128];
      std::snprintf(line, sizeof(line), "%-10s %6zu  %10.6f  %12.6f  %9.6f\n",
                    std::string(AlgorithmName(s.algorithm)).c_str(), s.count,
                    s.mean, s.median, s.p95);
      std::cerr << line;
    }
  }
  return result.failures.empty() ? kExitOk : kExitBudget;
}

int RunOracle(const OracleArgs& args) {
  const Graph g = ReadGraphFile(args.graph);
  OracleOptions options;
  options.max_states = args.cap;
  const RatioReport report = VerifyRatios(g, RngSeed{args.seed}, options);
  ordered_json out;
  out["optimal_route"] = FormatRoute(report.optimum.route);
  out["optimal_aoi"] = report.optimum.aoi;
  out["lower_bound"] = report.lower_bound;
  out["cycles_evaluated"] = report.optimum.cycles_evaluated;
  out["states_visited"] = report.optimum.states_visited;
  ordered_json schemes = ordered_json::array();
  for (const SchemeRatio& s : report.schemes) {
    schemes.push_back({{"scheme", s.scheme},
                       {"route", FormatRoute(s.route)},
                       {"aoi", s.aoi},
                       {"ratio_to_optimum", s.ratio_to_optimum},
                       {"ratio_to_lower_bound", s.ratio_to_lower_bound},
                       {"within_bound", s.within_bound}});
  }
  out["schemes"] = std::move(schemes);
  out["all_within_bound"] = report.all_within_bound;
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Age-of-information patrol route planner"};
  app.require_subcommand(1);

  EvalArgs eval;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate the AoI of a route");
  eval_cmd->add_option("--graph", eval.graph, "Graph JSON file")->required();
  eval_cmd->add_option("--route", eval.route, "Closed walk, e.g. 0,1,2,0")->required();
  eval_cmd->add_flag("--simulate", eval.simulate, "Also run the discretized simulation");
  eval_cmd->add_option("--dx", eval.sim.dx, "Simulation spatial step");
  eval_cmd->add_option("--dt", eval.sim.dt, "Simulation time step");
  eval_cmd->add_option("--warmup", eval.sim.warmup_periods, "Discarded periods");
  eval_cmd->add_option("--measure", eval.sim.measure_periods, "Measured periods");

  PlanArgs plan;
  CLI::App* plan_cmd = app.add_subcommand("plan", "Plan a route with one scheme");
  plan_cmd->add_option("--graph", plan.graph, "Graph JSON file")->required();
  plan_cmd->add_option("--scheme", plan.scheme, "Planning scheme")
      ->check(CLI::IsMember({"dup", "cpp", "heu_dup", "heu_cpp", "rand_dup", "rand_cpp"}));
  plan_cmd->add_option("--seed", plan.seed, "Seed for rand_* schemes");
  plan_cmd->add_option("--start", plan.start, "Start node");

  BenchArgs bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Random-graph ratio study");
  bench_cmd->add_option("--n", bench.config.n, "Nodes per graph")->required();
  bench_cmd->add_option("--p", bench.config.p, "Edge probability")->required();
  bench_cmd->add_option("--graphs", bench.config.graph_count, "Graphs to generate");
  bench_cmd->add_option("--seed", bench.seed, "Master seed");
  bench_cmd->add_option("--algs", bench.algs, "Comma-separated algorithms");
  bench_cmd->add_option("--trials", bench.config.random_trials_per_graph,
                        "Routes per graph for rand_* algorithms");
  bench_cmd->add_option("--low", bench.config.length_low, "Edge length lower limit");
  bench_cmd->add_option("--high", bench.config.length_high, "Edge length upper limit");
  bench_cmd->add_option("--max-attempts", bench.config.max_attempts,
                        "Rejection-sampling attempts per graph");
  bench_cmd->add_option("--out", bench.out, "CSV output file (default stdout)");

  OracleArgs oracle;
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Exhaustive optimum and ratios");
  oracle_cmd->add_option("--graph", oracle.graph, "Graph JSON file")->required();
  oracle_cmd->add_option("--cap", oracle.cap, "Search state budget");
  oracle_cmd->add_option("--seed", oracle.seed, "Seed for rand_* schemes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (eval_cmd->parsed()) return RunEval(eval);
    if (plan_cmd->parsed()) return RunPlan(plan);
    if (bench_cmd->parsed()) return RunBench(bench);
    if (oracle_cmd->parsed()) return RunOracle(oracle);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return IsBudgetError(e.code()) ? kExitBudget : kExitValidation;
  }
  return kExitValidation;
}
