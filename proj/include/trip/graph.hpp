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

#ifndef TRIP_GRAPH_HPP_
#define TRIP_GRAPH_HPP_

#include <cstdint>
#include <ostream>
#include <vector>

#include "trip/instance.hpp"

namespace trip {

// Vertex of the layered graph: layer 0 is the source, layer n+1 the sink.
// For 1 <= layer <= n the move is d_layer = xi[value_index] - x_layer and
// capacity is the resource still available after the prefix.
struct NodeRef {
  int layer = 0;
  int value_index = 0;
  int64_t capacity = 0;

  friend bool operator==(const NodeRef&, const NodeRef&) = default;
};

// Equivalence class of NodeRefs that differ only in capacity.
struct QNodeRef {
  int layer = 0;
  int value_index = 0;

  friend bool operator==(const QNodeRef&, const QNodeRef&) = default;
};

struct Edge {
  NodeRef to;
  double weight = 0.0;
  int64_t consumption = 0;
};

struct QEdge {
  QNodeRef to;
  double weight = 0.0;
  int64_t consumption = 0;
};

inline constexpr int kPackedLayerBits = 20;
inline constexpr int kPackedValueBits = 16;
inline constexpr int kPackedCapacityBits = 28;

// Packs a node into one word (20 bits layer, 16 bits value, 28 bits capacity).
uint64_t pack(const NodeRef& node);
NodeRef unpack(uint64_t key);

NodeRef source_node(const TripInstance& inst);
NodeRef sink_node(const TripInstance& inst);

// Weight of an edge leaving layer_u. delta_u is ignored at the source and
// edges into the sink weigh 0.
double edge_weight(const TripInstance& inst, int layer_u, int64_t delta_u,
                   int64_t delta_v);

// Out-edges of node in the capacity-expanded graph.
std::vector<Edge> successors(const TripInstance& inst, const NodeRef& node);
// Out-edges of a class in the quotient graph, ignoring capacity.
std::vector<QEdge> q_successors(const TripInstance& inst, const QNodeRef& qnode);

struct ExplicitGraph {
  struct Arc {
    int from = 0;
    int to = 0;
    double weight = 0.0;
    int64_t consumption = 0;
  };
  std::vector<NodeRef> nodes;  // source first, sink last
  std::vector<Arc> arcs;
};

inline constexpr int64_t kDefaultExplicitCap = 20'000'000;

// Materializes every node reachable from the source. Throws Error when
// n * (delta + 1) * |xi| exceeds cap.
ExplicitGraph build_explicit(const TripInstance& inst,
                             int64_t cap = kDefaultExplicitCap);

int64_t node_bound(const TripInstance& inst);
int64_t arc_bound(const TripInstance& inst);

// One "u v weight consumption" line per arc; nodes print as
// layer,delta,capacity with "s" and "t" for the terminals.
void write_edge_list(const TripInstance& inst, const ExplicitGraph& graph,
                     std::ostream& out);

// Path s, v_1, ..., v_n, t -> d with d_i = xi - x_i at v_i. Throws Error on
// a broken path.
StepVector path_to_step(const TripInstance& inst, const std::vector<NodeRef>& path);
// Inverse of path_to_step for a feasible d.
std::vector<NodeRef> step_to_path(const TripInstance& inst, const StepVector& d);
double path_weight(const TripInstance& inst, const std::vector<NodeRef>& path);

}  // namespace trip

#endif  // TRIP_GRAPH_HPP_
