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

#ifndef TRIP_TOPO_SOLVER_HPP_
#define TRIP_TOPO_SOLVER_HPP_

#include "trip/instance.hpp"

namespace trip {

// Exact solve by dynamic programming over the layers of the graph in
// topological order, O(n * delta * |xi|^2). The radius is clamped first.
// Among optimal paths the one ending with the largest remaining capacity
// wins, then the smallest value index; predecessors prefer the smallest
// value index. stats.nodes_expanded / edges_processed count the reachable
// nodes and arcs, source and sink included.
Solution solve_topo(const TripInstance& inst);

}  // namespace trip

#endif  // TRIP_TOPO_SOLVER_HPP_
