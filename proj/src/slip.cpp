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

#include "trip/slip.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "trip/topo_solver.hpp"

namespace trip {

SubproblemSolver parse_subproblem_solver(const std::string& name) {
  if (name == "topo") return SubproblemSolver::kTopo;
  if (name == "astar") return SubproblemSolver::kAstar;
  if (name == "hybrid") return SubproblemSolver::kHybrid;
  throw Error("unknown subproblem solver \"" + name + "\"");
}

std::string subproblem_solver_name(SubproblemSolver solver) {
  switch (solver) {
    case SubproblemSolver::kTopo: return "topo";
    case SubproblemSolver::kAstar: return "astar";
    case SubproblemSolver::kHybrid: return "hybrid";
  }
  return "?";
}

double slip_objective(const ControlProblem& problem, std::span<const int64_t> x,
                      double alpha) {
  return problem.value_at(x) + alpha * total_variation(x);
}

Solution solve_subproblem(const TripInstance& inst, const SlipConfig& config,
                          std::string* used) {
  bool topo = config.solver == SubproblemSolver::kTopo;
  if (config.solver == SubproblemSolver::kHybrid) topo = inst.delta < config.delta_d;
  if (used) *used = topo ? "topo" : "astar";
  if (topo) return solve_topo(inst);
  AstarOptions options = config.astar;
  if (config.epsilon) options.epsilon = config.epsilon;
  return solve_astar(inst, options);
}

SlipTrace run_slip(const ControlProblem& problem, std::vector<int64_t> x0,
                   const SlipConfig& config) {
  if (config.delta0 < 1) throw Error("delta0 must be at least 1");
  if (!(config.rho > 0.0 && config.rho < 1.0)) throw Error("rho must lie in (0, 1)");
  if (config.alpha < 0.0) throw Error("alpha must be nonnegative");
  const int n = problem.n();
  if (x0.size() != static_cast<size_t>(n)) throw Error("x0 has the wrong length");
  const auto& xi = problem.xi();
  for (int64_t v : x0) {
    if (!std::binary_search(xi.begin(), xi.end(), v)) throw Error("x0 is not in xi");
  }

  SlipTrace trace;
  std::vector<int64_t> x = std::move(x0);
  double j = slip_objective(problem, x, config.alpha);
  trace.status = "max_outer";

  for (int outer = 0; outer < config.max_outer; ++outer) {
    trace.outer_iterations = outer + 1;
    const std::vector<double> grad = problem.gradient_at(x);
    int64_t delta = config.delta0;
    bool accepted = false;
    for (int inner = 0; !accepted; ++inner) {
      SlipStep step;
      step.outer = outer;
      step.inner = inner;
      TripInstance inst;
      inst.n = n;
      inst.c = grad;
      inst.alpha = config.alpha;
      inst.delta = delta;
      inst.xi = xi;
      inst.x = x;
      inst.gamma = problem.gamma();
      step.instance = validate(std::move(inst));

      Solution sol = solve_subproblem(step.instance, config, &step.solver);
      step.d = sol.d;
      step.stats = sol.stats;
      step.subproblem_objective = sol.objective;
      // d = 0 is feasible and scores alpha TV(x).
      double predicted = objective(step.instance, std::vector<int64_t>(n, 0)) - sol.objective;
      if (predicted <= 1e-12 * (1.0 + std::abs(j))) predicted = 0.0;
      step.predicted = predicted;
      step.j_before = j;

      if (predicted == 0.0) {
        step.j_after = j;
        trace.steps.push_back(std::move(step));
        trace.status = "converged";
        trace.x_final = x;
        trace.j_final = j;
        return trace;
      }

      std::vector<int64_t> candidate(n);
      for (int i = 0; i < n; ++i) candidate[i] = x[i] + sol.d[i];
      const double j_new = slip_objective(problem, candidate, config.alpha);
      step.j_after = j_new;
      step.actual = j - j_new;
      step.accepted = step.actual >= config.rho * predicted;
      trace.steps.push_back(step);

      if (step.accepted) {
        x = std::move(candidate);
        j = j_new;
        accepted = true;
      } else if (delta == 1) {
        trace.status = "radius_below_one";
        trace.x_final = x;
        trace.j_final = j;
        return trace;
      } else {
        delta = std::max<int64_t>(1, delta / 2);
      }
    }
  }
  trace.x_final = x;
  trace.j_final = j;
  trace.final_predicted = trace.steps.empty() ? 0.0 : trace.steps.back().predicted;
  return trace;
}

InitStrategy parse_init_strategy(const std::string& name) {
  if (name == "zero") return InitStrategy::kZero;
  if (name == "relax_round") return InitStrategy::kRelaxRound;
  if (name == "mean_round") return InitStrategy::kMeanRound;
  throw Error("unknown initial iterate strategy \"" + name + "\"");
}

namespace {

int64_t round_to_xi(const std::vector<int64_t>& xi, double v) {
  int64_t best = xi.front();
  double best_gap = std::abs(v - static_cast<double>(best));
  for (int64_t cand : xi) {
    const double gap = std::abs(v - static_cast<double>(cand));
    if (gap < best_gap) {
      best = cand;
      best_gap = gap;
    }
  }
  return best;
}

double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double e : v) s += e * e;
  return std::sqrt(s);
}

}  // namespace

std::vector<int64_t> relaxed_rounded(const ControlProblem& problem) {
  const int n = problem.n();
  const double lo = static_cast<double>(problem.xi().front());
  const double hi = static_cast<double>(problem.xi().back());
  std::vector<double> x(n, std::clamp(0.0, lo, hi));
  const std::vector<double> g0 = problem.gradient_coeffs(x);

  // Largest curvature by power iteration on gradient differences.
  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  double lipschitz = 0.0;
  for (int it = 0; it < 30; ++it) {
    std::vector<double> probe(n);
    for (int i = 0; i < n; ++i) probe[i] = x[i] + v[i];
    std::vector<double> hv = problem.gradient_coeffs(probe);
    for (int i = 0; i < n; ++i) hv[i] -= g0[i];
    const double len = norm(hv);
    if (len == 0.0) break;
    lipschitz = len;
    for (int i = 0; i < n; ++i) v[i] = hv[i] / len;
  }
  const double step = lipschitz > 0.0 ? 1.0 / lipschitz : 1.0;

  for (int it = 0; it < 500; ++it) {
    const std::vector<double> g = problem.gradient_coeffs(x);
    std::vector<double> moved(n);
    for (int i = 0; i < n; ++i) moved[i] = std::clamp(x[i] - g[i], lo, hi) - x[i];
    if (norm(moved) < 1e-4) break;
    for (int i = 0; i < n; ++i) x[i] = std::clamp(x[i] - step * g[i], lo, hi);
  }

  std::vector<int64_t> rounded(n);
  for (int i = 0; i < n; ++i) rounded[i] = round_to_xi(problem.xi(), x[i]);
  return rounded;
}

std::vector<int64_t> initial_iterate(const ControlProblem& problem,
                                     InitStrategy strategy) {
  const int n = problem.n();
  switch (strategy) {
    case InitStrategy::kZero:
      return std::vector<int64_t>(n, round_to_xi(problem.xi(), 0.0));
    case InitStrategy::kRelaxRound:
      return relaxed_rounded(problem);
    case InitStrategy::kMeanRound: {
      std::vector<int64_t> r = relaxed_rounded(problem);
      const int64_t zero = round_to_xi(problem.xi(), 0.0);
      for (int i = 0; i < n; ++i) {
        r[i] = round_to_xi(problem.xi(), 0.5 * static_cast<double>(r[i] + zero));
      }
      return r;
    }
  }
  return {};
}

void write_trace(const SlipTrace& trace, std::ostream& out) {
  for (size_t k = 0; k < trace.steps.size(); ++k) {
    const SlipStep& s = trace.steps[k];
    nlohmann::ordered_json rec;
    rec["record"] = "step";
    rec["id"] = k;
    rec["outer"] = s.outer;
    rec["inner"] = s.inner;
    rec["delta"] = s.instance.delta;
    rec["solver"] = s.solver;
    rec["predicted"] = s.predicted;
    rec["actual"] = s.actual;
    rec["accepted"] = s.accepted;
    rec["j_before"] = s.j_before;
    rec["j_after"] = s.j_after;
    rec["subproblem_objective"] = s.subproblem_objective;
    rec["d"] = s.d;
    rec["stats"] = stats_to_json(s.stats, false);
    rec["instance"] = nlohmann::ordered_json::parse(write_instance(s.instance));
    out << rec.dump() << '\n';
  }
  nlohmann::ordered_json fin;
  fin["record"] = "final";
  fin["status"] = trace.status;
  fin["outer_iterations"] = trace.outer_iterations;
  fin["subproblems"] = trace.steps.size();
  fin["final_predicted"] = trace.final_predicted;
  fin["j_final"] = trace.j_final;
  fin["x_final"] = trace.x_final;
  out << fin.dump() << '\n';
}

std::vector<TripInstance> read_trace_instances(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open trace " + path);
  std::vector<TripInstance> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw Error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
    if (rec.value("record", "") != "step") continue;
    if (!rec.contains("instance")) {
      throw Error(path + ":" + std::to_string(lineno) + ": step without instance");
    }
    out.push_back(instance_from_json(rec["instance"]));
  }
  return out;
}

}  // namespace trip
