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

#include "trip/topo_solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <span>
#include <vector>

#include "trip/graph.hpp"
#include "trip/simd/kernels.hpp"

namespace trip {

Solution solve_topo(const TripInstance& original) {
  const auto start = std::chrono::steady_clock::now();
  const TripInstance inst = clamp_delta(original);
  const int n = inst.n;
  const int m = inst.num_values();
  const size_t width = static_cast<size_t>(inst.delta) + 1;
  const size_t layer_size = width * m;
  constexpr double kInf = std::numeric_limits<double>::infinity();

  // cost[j * width + eta]: cheapest prefix ending in (layer, j, eta).
  std::vector<double> cur(layer_size, kInf);
  std::vector<double> next(layer_size, kInf);
  // pred[(layer - 1) * layer_size + j * width + eta]: value index in layer-1.
  std::vector<uint16_t> pred(static_cast<size_t>(n) * layer_size, 0);

  SolverStats stats;
  stats.nodes_expanded = 2;  // source and sink

  for (int j = 0; j < m; ++j) {
    const int64_t delta_v = inst.shift(1, j);
    const int64_t use = inst.gamma[0] * std::abs(delta_v);
    if (use > inst.delta) continue;
    cur[j * width + (inst.delta - use)] = edge_weight(inst, 0, 0, delta_v);
    ++stats.edges_processed;
  }

  std::vector<int64_t> finite_suffix(width + 1);
  std::vector<char> row_live(m);
  std::vector<int64_t> use_of(m);
  for (int layer = 1; layer < n; ++layer) {
    const int to_layer = layer + 1;
    const int64_t g = inst.gamma[to_layer - 1];
    for (int jv = 0; jv < m; ++jv) use_of[jv] = g * std::abs(inst.shift(to_layer, jv));

    // Reachable nodes of this layer and the arcs that leave them.
    for (int j = 0; j < m; ++j) {
      const double* row = cur.data() + j * width;
      finite_suffix[width] = 0;
      for (size_t eta = width; eta-- > 0;) {
        finite_suffix[eta] = finite_suffix[eta + 1] + (row[eta] < kInf ? 1 : 0);
      }
      row_live[j] = finite_suffix[0] > 0;
      stats.nodes_expanded += finite_suffix[0];
      for (int jv = 0; jv < m; ++jv) {
        if (use_of[jv] <= inst.delta) stats.edges_processed += finite_suffix[use_of[jv]];
      }
    }

    std::fill(next.begin(), next.end(), kInf);
    uint16_t* pred_layer = pred.data() + static_cast<size_t>(to_layer - 1) * layer_size;
    for (int jv = 0; jv < m; ++jv) {
      const int64_t use = use_of[jv];
      if (use > inst.delta) continue;
      const int64_t delta_v = inst.shift(to_layer, jv);
      const size_t len = width - static_cast<size_t>(use);
      std::span<double> dst(next.data() + jv * width, len);
      std::span<uint16_t> dst_pred(pred_layer + jv * width, len);
      for (int j = 0; j < m; ++j) {
        if (!row_live[j]) continue;
        const double w = edge_weight(inst, layer, inst.shift(layer, j), delta_v);
        simd::shifted_min(dst, dst_pred,
                          std::span<const double>(cur.data() + j * width + use, len),
                          w, static_cast<uint16_t>(j));
      }
    }
    std::swap(cur, next);
  }

  // Last layer: every reachable node has exactly one arc into the sink.
  double best = kInf;
  int best_j = -1;
  int64_t best_eta = -1;
  for (int64_t eta = inst.delta; eta >= 0; --eta) {
    for (int j = 0; j < m; ++j) {
      const double v = cur[j * width + eta];
      if (v < kInf) {
        ++stats.nodes_expanded;
        ++stats.edges_processed;
      }
      if (v < best) {
        best = v;
        best_j = j;
        best_eta = eta;
      }
    }
  }
  stats.nodes_generated = stats.nodes_expanded;

  StepVector d(n);
  int j = best_j;
  int64_t eta = best_eta;
  for (int layer = n; layer >= 1; --layer) {
    const int64_t delta = inst.shift(layer, j);
    d[layer - 1] = delta;
    if (layer == 1) break;
    const int prev = pred[static_cast<size_t>(layer - 1) * layer_size + j * width + eta];
    eta += inst.gamma[layer - 1] * std::abs(delta);
    j = prev;
  }

  stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return make_solution(original, std::move(d), stats);
}

}  // namespace trip
