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

#include "trip/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <unordered_map>

namespace trip {

uint64_t pack(const NodeRef& node) {
  return (static_cast<uint64_t>(node.layer) << (kPackedValueBits + kPackedCapacityBits)) |
         (static_cast<uint64_t>(node.value_index) << kPackedCapacityBits) |
         static_cast<uint64_t>(node.capacity);
}

NodeRef unpack(uint64_t key) {
  NodeRef node;
  node.capacity = static_cast<int64_t>(key & ((uint64_t{1} << kPackedCapacityBits) - 1));
  node.value_index = static_cast<int>((key >> kPackedCapacityBits) &
                                      ((uint64_t{1} << kPackedValueBits) - 1));
  node.layer = static_cast<int>(key >> (kPackedValueBits + kPackedCapacityBits));
  return node;
}

NodeRef source_node(const TripInstance& inst) { return {0, 0, inst.delta}; }
NodeRef sink_node(const TripInstance& inst) { return {inst.n + 1, 0, 0}; }

double edge_weight(const TripInstance& inst, int layer_u, int64_t delta_u,
                   int64_t delta_v) {
  if (layer_u >= inst.n) return 0.0;
  if (layer_u == 0) return inst.c[0] * static_cast<double>(delta_v);
  const int64_t jump = inst.x[layer_u] + delta_v - inst.x[layer_u - 1] - delta_u;
  return inst.c[layer_u] * static_cast<double>(delta_v) +
         inst.alpha * static_cast<double>(std::abs(jump));
}

std::vector<Edge> successors(const TripInstance& inst, const NodeRef& node) {
  std::vector<Edge> out;
  if (node.layer > inst.n) return out;
  if (node.layer == inst.n) {
    out.push_back({sink_node(inst), 0.0, 0});
    return out;
  }
  const int next = node.layer + 1;
  const int64_t delta_u = node.layer == 0 ? 0 : inst.shift(node.layer, node.value_index);
  const int64_t g = inst.gamma[next - 1];
  for (int j = 0; j < inst.num_values(); ++j) {
    const int64_t delta_v = inst.shift(next, j);
    const int64_t use = g * std::abs(delta_v);
    if (use > node.capacity) continue;
    out.push_back({{next, j, node.capacity - use},
                   edge_weight(inst, node.layer, delta_u, delta_v),
                   use});
  }
  return out;
}

std::vector<QEdge> q_successors(const TripInstance& inst, const QNodeRef& qnode) {
  std::vector<QEdge> out;
  if (qnode.layer > inst.n) return out;
  if (qnode.layer == inst.n) {
    out.push_back({{inst.n + 1, 0}, 0.0, 0});
    return out;
  }
  const int next = qnode.layer + 1;
  const int64_t delta_u = qnode.layer == 0 ? 0 : inst.shift(qnode.layer, qnode.value_index);
  const int64_t g = inst.gamma[next - 1];
  for (int j = 0; j < inst.num_values(); ++j) {
    const int64_t delta_v = inst.shift(next, j);
    out.push_back({{next, j},
                   edge_weight(inst, qnode.layer, delta_u, delta_v),
                   g * std::abs(delta_v)});
  }
  return out;
}

int64_t node_bound(const TripInstance& inst) {
  return static_cast<int64_t>(inst.n) * (inst.delta + 1) * inst.num_values() + 2;
}

int64_t arc_bound(const TripInstance& inst) {
  const int64_t m = inst.num_values();
  return m * m * inst.n * (inst.delta + 1) + m + (inst.delta + 1) * m;
}

ExplicitGraph build_explicit(const TripInstance& inst, int64_t cap) {
  if (static_cast<int64_t>(inst.n) * (inst.delta + 1) * inst.num_values() > cap) {
    throw Error("explicit graph would exceed the build cap");
  }
  ExplicitGraph graph;
  std::unordered_map<uint64_t, int> index;
  auto intern = [&](const NodeRef& node) {
    const auto [it, inserted] = index.emplace(pack(node), static_cast<int>(graph.nodes.size()));
    if (inserted) graph.nodes.push_back(node);
    return it->second;
  };
  intern(source_node(inst));
  std::vector<int> frontier = {0};
  for (int layer = 0; layer <= inst.n; ++layer) {
    std::vector<int> next;
    for (int id : frontier) {
      const NodeRef node = graph.nodes[id];
      for (const Edge& e : successors(inst, node)) {
        const size_t before = graph.nodes.size();
        int to;
        if (e.to.layer == inst.n + 1) {
          to = -1;  // the sink is appended last
        } else {
          to = intern(e.to);
          if (graph.nodes.size() != before) next.push_back(to);
        }
        graph.arcs.push_back({id, to, e.weight, e.consumption});
      }
    }
    frontier = std::move(next);
  }
  const int t = static_cast<int>(graph.nodes.size());
  graph.nodes.push_back(sink_node(inst));
  for (auto& arc : graph.arcs) {
    if (arc.to < 0) arc.to = t;
  }
  return graph;
}

namespace {

void write_node(const TripInstance& inst, const NodeRef& node, std::ostream& out) {
  if (node.layer == 0) {
    out << 's';
  } else if (node.layer == inst.n + 1) {
    out << 't';
  } else {
    out << node.layer << ',' << inst.shift(node.layer, node.value_index) << ','
        << node.capacity;
  }
}

}  // namespace

void write_edge_list(const TripInstance& inst, const ExplicitGraph& graph,
                     std::ostream& out) {
  for (const auto& arc : graph.arcs) {
    write_node(inst, graph.nodes[arc.from], out);
    out << ' ';
    write_node(inst, graph.nodes[arc.to], out);
    out << ' ' << arc.weight << ' ' << arc.consumption << '\n';
  }
}

StepVector path_to_step(const TripInstance& inst, const std::vector<NodeRef>& path) {
  if (path.size() != static_cast<size_t>(inst.n) + 2) {
    throw Error("path must visit every layer exactly once");
  }
  if (!(path.front() == source_node(inst))) throw Error("path does not start at the source");
  if (path.back().layer != inst.n + 1) throw Error("path does not end at the sink");
  StepVector d(inst.n);
  for (int i = 1; i <= inst.n; ++i) {
    const NodeRef& u = path[i - 1];
    const NodeRef& v = path[i];
    if (v.layer != i || v.value_index < 0 || v.value_index >= inst.num_values()) {
      throw Error("broken path at layer " + std::to_string(i));
    }
    const int64_t delta_v = inst.shift(i, v.value_index);
    if (v.capacity != u.capacity - inst.gamma[i - 1] * std::abs(delta_v) || v.capacity < 0) {
      throw Error("capacity mismatch on path at layer " + std::to_string(i));
    }
    d[i - 1] = delta_v;
  }
  return d;
}

std::vector<NodeRef> step_to_path(const TripInstance& inst, const StepVector& d) {
  if (!is_feasible(inst, d)) throw Error("step vector is not feasible");
  std::vector<NodeRef> path;
  path.reserve(inst.n + 2);
  path.push_back(source_node(inst));
  int64_t cap = inst.delta;
  for (int i = 1; i <= inst.n; ++i) {
    cap -= inst.gamma[i - 1] * std::abs(d[i - 1]);
    const auto it = std::lower_bound(inst.xi.begin(), inst.xi.end(), inst.x[i - 1] + d[i - 1]);
    path.push_back({i, static_cast<int>(it - inst.xi.begin()), cap});
  }
  path.push_back(sink_node(inst));
  return path;
}

double path_weight(const TripInstance& inst, const std::vector<NodeRef>& path) {
  double total = 0.0;
  for (size_t k = 0; k + 1 < path.size(); ++k) {
    const NodeRef& u = path[k];
    const NodeRef& v = path[k + 1];
    const int64_t delta_u = u.layer == 0 || u.layer > inst.n ? 0 : inst.shift(u.layer, u.value_index);
    const int64_t delta_v = v.layer > inst.n ? 0 : inst.shift(v.layer, v.value_index);
    total += edge_weight(inst, u.layer, delta_u, delta_v);
  }
  return total;
}

}  // namespace trip
