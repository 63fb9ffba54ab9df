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

#ifndef TRIP_INSTANCE_HPP_
#define TRIP_INSTANCE_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace trip {

// Raised for malformed input: invalid instances, broken paths, parse errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using StepVector = std::vector<int64_t>;

// One discretized trust-region subproblem
//
//   min_d  sum_i c_i d_i + alpha * sum_{i<n} |x_{i+1}+d_{i+1} - x_i - d_i|
//   s.t.   x_i + d_i in xi,   sum_i gamma_i |d_i| <= delta.
//
// All resource quantities (delta, gamma, xi, x, d) are exact integers; only
// the cost data is floating point.
struct TripInstance {
  int n = 0;
  std::vector<double> c;
  double alpha = 0.0;
  int64_t delta = 0;
  std::vector<int64_t> xi;  // strictly ascending
  std::vector<int64_t> x;   // x_i in xi
  std::vector<int64_t> gamma;

  int num_values() const { return static_cast<int>(xi.size()); }
  // delta_j = xi_j - x_layer for a 1-based layer.
  int64_t shift(int layer, int value_index) const {
    return xi[value_index] - x[layer - 1];
  }
  // Index of xi_j with xi_j == x_layer (the zero move).
  int zero_index(int layer) const;
};

struct SolverStats {
  int64_t nodes_expanded = 0;
  int64_t nodes_generated = 0;
  int64_t edges_processed = 0;
  int64_t preprocessing_iterations = 0;
  double wall_seconds = 0.0;
};

struct Solution {
  StepVector d;
  double objective = 0.0;
  int64_t resource = 0;
  SolverStats stats;
};

// Checks every invariant and throws Error listing all violations.
TripInstance validate(TripInstance raw);

// Upper bound on the useful radius: (max xi - min xi) * max gamma * n.
int64_t delta_bound(const TripInstance& inst);
TripInstance clamp_delta(TripInstance inst);

double objective(const TripInstance& inst, std::span<const int64_t> d);
int64_t resource(const TripInstance& inst, std::span<const int64_t> d);
bool is_feasible(const TripInstance& inst, std::span<const int64_t> d);
// Sum of jump heights of an integer control.
double total_variation(std::span<const int64_t> x);

// Builds a Solution for d with objective/resource recomputed from scratch.
Solution make_solution(const TripInstance& inst, StepVector d,
                       const SolverStats& stats);

nlohmann::json instance_to_json(const TripInstance& inst);
TripInstance instance_from_json(const nlohmann::json& doc);
std::string write_instance(const TripInstance& inst);
TripInstance read_instance(const std::string& text);
TripInstance read_instance_file(const std::string& path);

nlohmann::json stats_to_json(const SolverStats& stats, bool with_timing = true);
nlohmann::json solution_to_json(const Solution& sol, bool with_timing = true);

}  // namespace trip

#endif  // TRIP_INSTANCE_HPP_
