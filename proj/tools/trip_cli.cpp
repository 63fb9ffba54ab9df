// Copyright 2026 The trip Authors.
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

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "trip/astar_solver.hpp"
#include "trip/bench.hpp"
#include "trip/graph.hpp"
#include "trip/heat_problem.hpp"
#include "trip/lagrange.hpp"
#include "trip/oracle.hpp"
#include "trip/signal_problem.hpp"
#include "trip/simd/kernels.hpp"
#include "trip/slip.hpp"
#include "trip/topo_solver.hpp"

namespace {

using trip::Error;

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  return out;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    open_out(path) << text;
  }
}

struct SolveArgs {
  std::string instance;
  std::string solver = "topo";
  double epsilon = 0.0;
  bool no_edge_pruning = false;
  bool no_bound_pruning = false;
  bool node_dominance = false;
  bool no_timing = false;
  std::string dual_csv;
  std::string dump_graph;
};

int cmd_solve(const SolveArgs& a) {
  const trip::TripInstance inst = trip::read_instance_file(a.instance);
  if (!a.dump_graph.empty()) {
    auto out = open_out(a.dump_graph);
    trip::write_edge_list(inst, trip::build_explicit(trip::clamp_delta(inst)), out);
  }
  trip::AstarOptions options;
  options.edge_pruning = !a.no_edge_pruning;
  options.upper_bound_pruning = !a.no_bound_pruning;
  options.node_dominance = a.node_dominance;
  if (a.epsilon > 0.0) options.epsilon = a.epsilon;
  if (!a.dual_csv.empty()) {
    const double eps = options.epsilon.value_or(trip::default_epsilon(inst));
    const auto tables = trip::binary_search(trip::clamp_delta(inst), eps);
    auto out = open_out(a.dual_csv);
    trip::write_dual_csv(tables, out);
  }

  trip::Solution sol;
  if (a.solver == "topo") {
    sol = trip::solve_topo(inst);
  } else if (a.solver == "astar") {
    sol = trip::solve_astar(inst, options);
  } else if (a.solver == "oracle") {
    sol = trip::solve_bruteforce(inst);
  } else {
    throw Error("unknown solver \"" + a.solver + "\"");
  }
  nlohmann::json doc = trip::solution_to_json(sol, !a.no_timing);
  doc["solver"] = a.solver;
  std::cout << doc.dump(2) << '\n';
  return 0;
}

struct SlipArgs {
  std::string problem = "heat";
  int n = 64;
  double alpha = 1e-3;
  uint64_t seed = 0;
  std::string x0 = "zero";
  std::string solver = "astar";
  double rho = 0.1;
  int64_t delta0 = 0;
  int64_t delta_d = 0;
  int max_outer = 1000;
  int fine = 0;
  double epsilon = 0.0;
  std::string trace = "-";
};

int cmd_slip(const SlipArgs& a) {
  if (a.n < 1) throw Error("n must be positive");
  std::unique_ptr<trip::ControlProblem> problem;
  if (a.problem == "heat") {
    problem = trip::make_heat_problem(a.n, a.fine > 0 ? a.fine : 4);
  } else if (a.problem == "signal") {
    problem = trip::make_signal_problem(a.n, a.seed, a.fine > 0 ? a.fine : 4096);
  } else {
    throw Error("unknown problem \"" + a.problem + "\"");
  }
  trip::SlipConfig config;
  config.delta0 = a.delta0 > 0 ? a.delta0 : std::max(1, a.n / 8);
  config.rho = a.rho;
  config.alpha = a.alpha;
  config.solver = trip::parse_subproblem_solver(a.solver);
  config.delta_d = a.delta_d;
  config.max_outer = a.max_outer;
  if (a.epsilon > 0.0) config.epsilon = a.epsilon;

  const auto x0 = trip::initial_iterate(*problem, trip::parse_init_strategy(a.x0));
  const trip::SlipTrace trace = trip::run_slip(*problem, x0, config);
  std::ostringstream text;
  trip::write_trace(trace, text);
  emit(a.trace, text.str());
  std::fprintf(stderr, "%s after %d outer iterations, %zu subproblems, J = %.10g\n",
               trace.status.c_str(), trace.outer_iterations, trace.steps.size(),
               trace.j_final);
  return 0;
}

struct BenchArgs {
  std::vector<std::string> traces;
  std::vector<std::string> solvers{"topo", "astar"};
  std::vector<int64_t> delta_d;
  std::string csv = "-";
  int workers = 0;
};

int cmd_bench(const BenchArgs& a) {
  const auto corpus = trip::load_corpus(a.traces);
  const auto rows = trip::run_bench(corpus, a.solvers, a.workers);
  std::ostringstream text;
  trip::write_csv(rows, text);
  emit(a.csv, text.str());
  for (const auto& s : a.solvers) {
    std::fprintf(stderr, "total,%s,%.6f\n", s.c_str(), trip::solver_time(rows, s));
  }
  for (int64_t dd : a.delta_d) {
    std::fprintf(stderr, "hybrid,%lld,%.6f\n", static_cast<long long>(dd),
                 trip::hybrid_time(rows, dd));
  }
  return 0;
}

struct GenRandomArgs {
  int n = 8;
  int m = 4;
  int64_t delta = 4;
  double alpha = 0.5;
  uint64_t seed = 0;
  std::string out = "-";
};

struct GenKnapsackArgs {
  int items = 5;
  int64_t max_weight = 10;
  int64_t budget = 0;
  double alpha = 0.5;
  uint64_t seed = 0;
  std::string out = "-";
  std::string items_out;
};

int cmd_gen_knapsack(const GenKnapsackArgs& a) {
  if (a.items < 1 || a.max_weight < 1) throw Error("need at least one item of positive weight");
  std::mt19937_64 rng(a.seed);
  std::uniform_int_distribution<int64_t> weight(1, a.max_weight);
  std::uniform_real_distribution<double> value(0.5, 10.0);
  trip::KnapsackItems items;
  int64_t total = 0;
  for (int i = 0; i < a.items; ++i) {
    items.weights.push_back(weight(rng));
    items.values.push_back(value(rng));
    total += items.weights.back();
  }
  const int64_t lightest = *std::min_element(items.weights.begin(), items.weights.end());
  items.budget = a.budget > 0 ? a.budget : std::max(lightest, total / 2);
  const auto red = trip::knapsack_reduce(items, a.alpha);
  emit(a.out, trip::write_instance(red.instance) + "\n");
  if (!a.items_out.empty()) {
    nlohmann::ordered_json doc;
    doc["values"] = items.values;
    doc["weights"] = items.weights;
    doc["budget"] = items.budget;
    doc["kept_items"] = red.kept_items;
    open_out(a.items_out) << doc.dump(2) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integer trust-region subproblem solvers"};
  app.require_subcommand(1);
  app.fallthrough();  // subcommands inherit this, so --simd works after them too
  std::string simd;
  app.add_option("--simd", simd, "Kernel set: scalar or avx2 (default: best available)")
      ->envname("TRIP_SIMD");

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Solve one instance and print the solution");
  s->add_option("instance", solve.instance, "Instance JSON file")->required();
  s->add_option("--solver", solve.solver, "topo, astar or oracle")
      ->check(CLI::IsMember({"topo", "astar", "oracle"}));
  s->add_option("--epsilon", solve.epsilon, "Multiplier bisection tolerance");
  s->add_flag("--no-edge-pruning", solve.no_edge_pruning);
  s->add_flag("--no-bound-pruning", solve.no_bound_pruning);
  s->add_flag("--node-dominance", solve.node_dominance);
  s->add_flag("--no-timing", solve.no_timing, "Omit wall_seconds from the output");
  s->add_option("--dual-csv", solve.dual_csv, "Write the bisection log as CSV");
  s->add_option("--dump-graph", solve.dump_graph, "Write the explicit graph as an edge list");

  SlipArgs slip;
  auto* sl = app.add_subcommand("slip", "Run the trust-region loop on a built-in problem");
  sl->add_option("--problem", slip.problem)->check(CLI::IsMember({"heat", "signal"}));
  sl->add_option("--n", slip.n, "Number of control intervals");
  sl->add_option("--alpha", slip.alpha, "Total variation weight");
  sl->add_option("--seed", slip.seed, "Kernel seed (signal)");
  sl->add_option("--x0", slip.x0, "zero, relax_round or mean_round")
      ->check(CLI::IsMember({"zero", "relax_round", "mean_round"}));
  sl->add_option("--solver", slip.solver, "topo, astar or hybrid")
      ->check(CLI::IsMember({"topo", "astar", "hybrid"}));
  sl->add_option("--rho", slip.rho, "Step acceptance ratio");
  sl->add_option("--delta0", slip.delta0, "Reset radius (default n/8)");
  sl->add_option("--delta-d", slip.delta_d, "Hybrid threshold: topo below it");
  sl->add_option("--max-outer", slip.max_outer);
  sl->add_option("--fine", slip.fine, "Fine grid: cells per interval (heat) or total (signal)");
  sl->add_option("--epsilon", slip.epsilon);
  sl->add_option("--trace", slip.trace, "Trace output (JSON lines)");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Replay trace corpora through several solvers");
  b->add_option("traces", bench.traces, "Trace files")->required()->check(CLI::ExistingFile);
  b->add_option("--solvers", bench.solvers)->delimiter(',');
  b->add_option("--delta-d", bench.delta_d, "Report hybrid time for this threshold");
  b->add_option("--csv", bench.csv);
  b->add_option("--workers", bench.workers, "Worker threads (default TRIP_WORKERS)");

  GenRandomArgs gr;
  auto* g = app.add_subcommand("gen-random", "Write a random instance");
  g->add_option("--n", gr.n);
  g->add_option("--m", gr.m, "Size of xi");
  g->add_option("--delta", gr.delta);
  g->add_option("--alpha", gr.alpha);
  g->add_option("--seed", gr.seed);
  g->add_option("-o,--out", gr.out);

  GenKnapsackArgs gk;
  auto* k = app.add_subcommand("gen-knapsack", "Write the instance encoding a random knapsack");
  k->add_option("--items", gk.items);
  k->add_option("--max-weight", gk.max_weight);
  k->add_option("--budget", gk.budget, "Default: half the total weight, at least the lightest item");
  k->add_option("--alpha", gk.alpha);
  k->add_option("--seed", gk.seed);
  k->add_option("-o,--out", gk.out);
  k->add_option("--items-out", gk.items_out, "Also write the items as JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!simd.empty()) {
      if (simd == "scalar") {
        trip::simd::set_active_isa(trip::simd::Isa::kScalar);
      } else if (simd == "avx2") {
        trip::simd::set_active_isa(trip::simd::Isa::kAvx2);
      } else {
        throw Error("unknown kernel set \"" + simd + "\"");
      }
    }
    if (*s) return cmd_solve(solve);
    if (*sl) return cmd_slip(slip);
    if (*b) return cmd_bench(bench);
    if (*g) {
      emit(gr.out, trip::write_instance(trip::gen_random(gr.n, gr.m, gr.delta, gr.alpha, gr.seed)) + "\n");
      return 0;
    }
    if (*k) return cmd_gen_knapsack(gk);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
