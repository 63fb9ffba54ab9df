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

#ifndef TRIP_LAGRANGE_HPP_
#define TRIP_LAGRANGE_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "trip/graph.hpp"
#include "trip/instance.hpp"

namespace trip {

// Absolute tolerance for dual comparisons that are strict in exact arithmetic.
inline constexpr double kDualTolerance = 1e-9;

// Cost-to-sink in the quotient graph with every arc reweighted by
// lambda * (resource consumption). cost[] holds the exact minimum; resource[]
// and next[] describe the least-resource path among those within
// kDualTolerance of it.
struct RelaxedTable {
  double lambda = 0.0;
  int n = 0;
  int num_values = 0;
  std::vector<double> cost;       // index (layer - 1) * num_values + j
  std::vector<int64_t> resource;  // resource of the chosen continuation
  std::vector<int32_t> next;      // value index in layer + 1, -1 in layer n
  double source_cost = 0.0;
  int64_t source_resource = 0;
  int source_next = 0;

  size_t index(int layer, int j) const {
    return static_cast<size_t>(layer - 1) * num_values + j;
  }
  // Lagrangian dual value at this multiplier: source_cost - lambda * delta.
  double dual_value(int64_t delta) const {
    return source_cost - lambda * static_cast<double>(delta);
  }
  // Step vector of the chosen source-to-sink path.
  StepVector extract_path(const TripInstance& inst) const;
};

RelaxedTable relaxed_costs_to_sink(const TripInstance& inst, double lambda);

// C(d) + lambda * (sum gamma_i |d_i| - delta).
double relaxed_objective(const TripInstance& inst, std::span<const int64_t> d,
                         double lambda);

struct DualIteration {
  double lambda = 0.0;
  double dual_value = 0.0;
  int64_t path_resource = 0;
  double path_cost = 0.0;  // C(d) of the extracted path
  std::string action;      // "probe", "raise_lower", "lower_upper", "early_exit"
};

struct LagrangeTables {
  int n = 0;
  int num_values = 0;
  std::vector<double> lambdas;              // ascending, contains 0
  std::vector<RelaxedTable> tables;         // parallel to lambdas
  double upper_bound = 0.0;                 // best feasible C(d) found
  std::optional<Solution> incumbent;
  std::optional<Solution> early_exit;      // proven optimum
  double lambda_star = 0.0;
  double bracket_lower = 0.0;
  double bracket_upper = 0.0;
  int64_t iterations = 0;                   // bisection steps
  std::vector<DualIteration> log;           // in evaluation order

  // max over lambda of zeta(class, lambda) - lambda * capacity; 0 at the sink.
  double heuristic(const NodeRef& node) const;

  // Interleaved copy of the tables: [(layer-1)*m + j][lambda]. Built by
  // binary_search; heuristic() reads it.
  std::vector<double> zeta_by_class;
  std::vector<double> source_by_lambda;
};

// Bisection on the multiplier over [0, max|c| + 2 alpha] until the bracket
// is narrower than epsilon. lambda = 0 and the initial upper end are always
// evaluated. Stops early when the least-resource relaxed optimum uses exactly
// the budget (or, at lambda = 0, fits within it).
LagrangeTables binary_search(const TripInstance& inst, double epsilon);

void write_dual_csv(const LagrangeTables& tables, std::ostream& out);

}  // namespace trip

#endif  // TRIP_LAGRANGE_HPP_
