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

#ifndef TRIP_ASTAR_SOLVER_HPP_
#define TRIP_ASTAR_SOLVER_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "trip/graph.hpp"
#include "trip/instance.hpp"
#include "trip/lagrange.hpp"

namespace trip {

struct AstarOptions {
  bool edge_pruning = true;
  bool upper_bound_pruning = true;
  // Skip a node when an expanded node of the same class has at least its
  // capacity and at most its cost. Off by default: rarely pays for itself.
  bool node_dominance = false;
  // Bisection tolerance; defaults to 1e-6 * (1 + max|c|).
  std::optional<double> epsilon;
};

// Optional instrumentation filled in by solve_astar.
struct AstarDiagnostics {
  bool record_order = false;
  std::vector<NodeRef> expansion_order;
  // Times a closed node was later reached with a cost lower by more than
  // kDualTolerance. Zero whenever the heuristic is consistent.
  int64_t closed_improvements = 0;
  int64_t max_expansions_per_node = 0;
  int64_t pruned_by_edge = 0;
  int64_t pruned_by_bound = 0;
  int64_t pruned_by_dominance = 0;
  bool early_exit = false;
};

// True when the arc (layer, delta_u) -> (layer + 1, delta_v) can never lie
// on an optimal path: its cost exceeds the zero move by more than the most
// the choice can save on the next jump. Defined for 1 <= layer <= n - 1.
bool edge_dominated(const TripInstance& inst, int layer, int64_t delta_u,
                    int64_t delta_v);

double default_epsilon(const TripInstance& inst);

// Clamps the radius, runs the multiplier bisection and, unless it proved
// optimality on its own, runs A* with the Lagrangian heuristic.
Solution solve_astar(const TripInstance& inst, const AstarOptions& options = {},
                     AstarDiagnostics* diag = nullptr);

// A* only, against tables already computed for clamp_delta(inst).
Solution astar_search(const TripInstance& inst, const LagrangeTables& tables,
                      const AstarOptions& options, AstarDiagnostics* diag = nullptr);

}  // namespace trip

#endif  // TRIP_ASTAR_SOLVER_HPP_
