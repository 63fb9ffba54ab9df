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

#include "trip/astar_solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <queue>
#include <unordered_map>

namespace trip {
namespace {

struct Label {
  double g = 0.0;
  double h = 0.0;
  uint64_t parent = 0;
  bool closed = false;
  int32_t expansions = 0;
};

struct OpenEntry {
  double f;
  double g;
  int64_t capacity;
  int layer;
  int value_index;
  uint64_t key;
};

// std::priority_queue pops the greatest element: order so that the greatest
// is (lowest f, highest capacity, deepest layer, smallest value index).
struct OpenOrder {
  bool operator()(const OpenEntry& a, const OpenEntry& b) const {
    if (a.f != b.f) return a.f > b.f;
    if (a.capacity != b.capacity) return a.capacity < b.capacity;
    if (a.layer != b.layer) return a.layer < b.layer;
    return a.value_index > b.value_index;
  }
};

}  // namespace

bool edge_dominated(const TripInstance& inst, int layer, int64_t delta_u,
                    int64_t delta_v) {
  const int64_t base = inst.x[layer] - inst.x[layer - 1] - delta_u;
  const double lhs = inst.c[layer] * static_cast<double>(delta_v) +
                     inst.alpha * static_cast<double>(std::abs(base + delta_v)) -
                     inst.alpha * static_cast<double>(std::abs(base));
  return lhs > inst.alpha * static_cast<double>(std::abs(delta_v));
}

double default_epsilon(const TripInstance& inst) {
  double c_max = 0.0;
  for (double v : inst.c) c_max = std::max(c_max, std::abs(v));
  return 1e-6 * (1.0 + c_max);
}

Solution astar_search(const TripInstance& inst, const LagrangeTables& tables,
                      const AstarOptions& options, AstarDiagnostics* diag) {
  const int n = inst.n;
  const int m = inst.num_values();
  if (n + 1 >= (1 << kPackedLayerBits) || m >= (1 << kPackedValueBits) ||
      inst.delta >= (int64_t{1} << kPackedCapacityBits)) {
    throw Error("instance too large for packed node keys");
  }
  AstarDiagnostics local;
  AstarDiagnostics& dg = diag ? *diag : local;

  const double bound = options.upper_bound_pruning
                           ? tables.upper_bound + kDualTolerance
                           : std::numeric_limits<double>::infinity();
  SolverStats stats;
  stats.preprocessing_iterations = tables.iterations;

  std::unordered_map<uint64_t, Label> labels;
  labels.reserve(1024);
  std::priority_queue<OpenEntry, std::vector<OpenEntry>, OpenOrder> open;

  const NodeRef source = source_node(inst);
  const uint64_t source_key = pack(source);
  const uint64_t sink_key = pack(sink_node(inst));
  {
    Label& s = labels[source_key];
    s.g = 0.0;
    s.h = tables.heuristic(source);
    s.parent = source_key;
    open.push({s.h, 0.0, source.capacity, 0, 0, source_key});
    ++stats.nodes_generated;
  }

  std::unordered_map<uint64_t, std::vector<std::pair<int64_t, double>>> expanded_by_class;
  auto relax = [&](const NodeRef& child, uint64_t parent_key, double g) {
    ++stats.edges_processed;
    const uint64_t key = pack(child);
    auto it = labels.find(key);
    if (it != labels.end()) {
      Label& lab = it->second;
      if (lab.closed) {
        if (g < lab.g - kDualTolerance) ++dg.closed_improvements;
        return;
      }
      if (g >= lab.g) return;
      if (g + lab.h > bound) {
        ++dg.pruned_by_bound;
        return;
      }
      lab.g = g;
      lab.parent = parent_key;
      open.push({g + lab.h, g, child.capacity, child.layer, child.value_index, key});
      ++stats.nodes_generated;
      return;
    }
    const double h = tables.heuristic(child);
    if (g + h > bound) {
      ++dg.pruned_by_bound;
      return;
    }
    labels.emplace(key, Label{g, h, parent_key, false, 0});
    open.push({g + h, g, child.capacity, child.layer, child.value_index, key});
    ++stats.nodes_generated;
  };

  bool reached = false;
  while (!open.empty()) {
    const OpenEntry top = open.top();
    open.pop();
    Label& lab = labels[top.key];
    if (lab.closed || top.g > lab.g) continue;
    lab.closed = true;
    const NodeRef node{top.layer, top.value_index, top.capacity};
    if (top.key == sink_key) {
      ++stats.nodes_expanded;
      reached = true;
      break;
    }
    if (options.node_dominance && node.layer >= 1) {
      auto& seen = expanded_by_class[pack({node.layer, node.value_index, 0})];
      const bool dominated = std::any_of(seen.begin(), seen.end(), [&](const auto& e) {
        return e.first >= node.capacity && e.second <= lab.g;
      });
      if (dominated) {
        ++dg.pruned_by_dominance;
        continue;
      }
      seen.emplace_back(node.capacity, lab.g);
    }
    ++stats.nodes_expanded;
    ++lab.expansions;
    dg.max_expansions_per_node = std::max<int64_t>(dg.max_expansions_per_node, lab.expansions);
    if (dg.record_order) dg.expansion_order.push_back(node);
    const double g = lab.g;

    if (node.layer == n) {
      relax(sink_node(inst), top.key, g);
      continue;
    }
    const int next = node.layer + 1;
    const int64_t delta_u = node.layer == 0 ? 0 : inst.shift(node.layer, node.value_index);
    const int64_t gamma = inst.gamma[next - 1];
    for (int j = 0; j < m; ++j) {
      const int64_t delta_v = inst.shift(next, j);
      const int64_t use = gamma * std::abs(delta_v);
      if (use > node.capacity) continue;
      if (options.edge_pruning && node.layer >= 1 &&
          edge_dominated(inst, node.layer, delta_u, delta_v)) {
        ++dg.pruned_by_edge;
        continue;
      }
      relax({next, j, node.capacity - use}, top.key,
            g + edge_weight(inst, node.layer, delta_u, delta_v));
    }
  }
  if (!reached) throw Error("A* exhausted the open list without reaching the sink");

  StepVector d(n);
  uint64_t key = labels[sink_key].parent;
  while (key != source_key) {
    const NodeRef node = unpack(key);
    d[node.layer - 1] = inst.shift(node.layer, node.value_index);
    key = labels[key].parent;
  }
  return make_solution(inst, std::move(d), stats);
}

Solution solve_astar(const TripInstance& original, const AstarOptions& options,
                     AstarDiagnostics* diag) {
  const auto start = std::chrono::steady_clock::now();
  const TripInstance inst = clamp_delta(original);
  const double eps = options.epsilon.value_or(default_epsilon(inst));
  const LagrangeTables tables = binary_search(inst, eps);
  Solution sol;
  if (tables.early_exit) {
    sol = *tables.early_exit;
    sol.stats = SolverStats{};
    sol.stats.preprocessing_iterations = tables.iterations;
    if (diag) diag->early_exit = true;
  } else {
    sol = astar_search(inst, tables, options, diag);
  }
  sol = make_solution(original, std::move(sol.d), sol.stats);
  sol.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return sol;
}

}  // namespace trip
