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

#ifndef TRIP_SLIP_HPP_
#define TRIP_SLIP_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "trip/astar_solver.hpp"
#include "trip/control_problem.hpp"
#include "trip/instance.hpp"

namespace trip {

enum class SubproblemSolver { kTopo, kAstar, kHybrid };

SubproblemSolver parse_subproblem_solver(const std::string& name);
std::string subproblem_solver_name(SubproblemSolver solver);

struct SlipConfig {
  int64_t delta0 = 1;
  double rho = 0.1;
  double alpha = 0.0;
  std::optional<double> epsilon;
  SubproblemSolver solver = SubproblemSolver::kAstar;
  // Hybrid: topo below this radius, A* from it on.
  int64_t delta_d = 0;
  int max_outer = 1000;
  AstarOptions astar;
};

struct SlipStep {
  int outer = 0;
  int inner = 0;
  TripInstance instance;
  StepVector d;
  double subproblem_objective = 0.0;
  double predicted = 0.0;
  double actual = 0.0;
  bool accepted = false;
  double j_before = 0.0;
  double j_after = 0.0;  // J(x + d), also for rejected steps
  std::string solver;
  SolverStats stats;
};

struct SlipTrace {
  std::vector<SlipStep> steps;
  std::vector<int64_t> x_final;
  double j_final = 0.0;
  // "converged": a subproblem predicted no reduction.
  // "radius_below_one": rejected at radius 1; every smaller radius admits
  //   only d = 0, whose predicted reduction is 0.
  // "max_outer": iteration cap hit.
  std::string status;
  double final_predicted = 0.0;
  int outer_iterations = 0;
};

// J(x) = F(x) + alpha TV(x).
double slip_objective(const ControlProblem& problem, std::span<const int64_t> x,
                      double alpha);

Solution solve_subproblem(const TripInstance& inst, const SlipConfig& config,
                          std::string* used = nullptr);

SlipTrace run_slip(const ControlProblem& problem, std::vector<int64_t> x0,
                   const SlipConfig& config);

enum class InitStrategy { kZero, kRelaxRound, kMeanRound };

InitStrategy parse_init_strategy(const std::string& name);

// Projected gradient on the box [min xi, max xi]^n without the TV term,
// rounded to the nearest member of xi.
std::vector<int64_t> relaxed_rounded(const ControlProblem& problem);
std::vector<int64_t> initial_iterate(const ControlProblem& problem,
                                     InitStrategy strategy);

// One JSON object per subproblem followed by a final record. Timing is left
// out so that reruns produce identical files.
void write_trace(const SlipTrace& trace, std::ostream& out);

// Subproblem instances of a trace file in order.
std::vector<TripInstance> read_trace_instances(const std::string& path);

}  // namespace trip

#endif  // TRIP_SLIP_HPP_
