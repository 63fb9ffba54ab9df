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

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "trip/graph.hpp"
#include "trip/lagrange.hpp"

using trip::TripInstance;

namespace {

struct Best {
  double cost = std::numeric_limits<double>::infinity();
  int64_t resource = 0;
};

// Relaxed cost and least resource over all suffixes d_layer+1..d_n that
// follow value index j at layer (layer 0 is the source), ignoring the budget.
Best enumerate_suffixes(const TripInstance& inst, int layer, int j, double lambda) {
  const int n = inst.n;
  const int m = inst.num_values();
  const int len = n - layer;
  std::vector<std::pair<double, int64_t>> all;
  std::vector<int> digit(len, 0);
  while (true) {
    double cost = 0.0;
    int64_t use = 0;
    int prev = j;
    for (int k = 0; k < len; ++k) {
      const int i = layer + k;  // 0-based interval
      const int64_t d = inst.xi[digit[k]] - inst.x[i];
      const int64_t u = inst.gamma[i] * std::abs(d);
      cost += inst.c[i] * static_cast<double>(d) + lambda * static_cast<double>(u);
      if (i > 0) cost += inst.alpha * static_cast<double>(std::abs(inst.xi[digit[k]] - inst.xi[prev]));
      use += u;
      prev = digit[k];
    }
    all.push_back({cost, use});
    int k = 0;
    while (k < len && ++digit[k] == m) digit[k++] = 0;
    if (k == len) break;
  }
  Best best;
  for (const auto& [c, u] : all) best.cost = std::min(best.cost, c);
  best.resource = std::numeric_limits<int64_t>::max();
  for (const auto& [c, u] : all) {
    if (c <= best.cost + 1e-9) best.resource = std::min(best.resource, u);
  }
  return best;
}

}  // namespace

TEST_CASE("relaxed tables match suffix enumeration") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 150; ++rep) {
    const TripInstance inst = trip::testing::small_instance(rng, 6, 4, 6);
    const double lambda = rep % 3 == 0 ? 0.0 : std::uniform_real_distribution<double>(0.0, 3.0)(rng);
    const auto t = trip::relaxed_costs_to_sink(inst, lambda);
    for (int j = 0; j < inst.num_values(); ++j) {
      CHECK(t.cost[t.index(inst.n, j)] == 0.0);
      CHECK(t.resource[t.index(inst.n, j)] == 0);
    }
    for (int layer = 1; layer < inst.n; ++layer) {
      for (int j = 0; j < inst.num_values(); ++j) {
        const Best b = enumerate_suffixes(inst, layer, j, lambda);
        CHECK(std::abs(t.cost[t.index(layer, j)] - b.cost) <= 1e-9);
        CHECK(t.resource[t.index(layer, j)] == b.resource);
      }
    }
    const Best s = enumerate_suffixes(inst, 0, 0, lambda);
    CHECK(std::abs(t.source_cost - s.cost) <= 1e-9);
    CHECK(t.source_resource == s.resource);
    const auto d = t.extract_path(inst);
    CHECK(trip::resource(inst, d) == s.resource);
    CHECK(std::abs(trip::relaxed_objective(inst, d, lambda) - t.dual_value(inst.delta)) <= 1e-9);
  }
}

TEST_CASE("zero costs give zero tables") {
  TripInstance inst;
  inst.n = 4;
  inst.xi = {-1, 0, 2};
  inst.x = {0, 0, 0, 0};
  inst.gamma = {1, 2, 1, 1};
  inst.c.assign(4, 0.0);
  inst.delta = 3;
  inst = trip::validate(inst);
  const auto t = trip::relaxed_costs_to_sink(inst, 0.7);
  for (double v : t.cost) CHECK(v == 0.0);
  for (int64_t r : t.resource) CHECK(r == 0);

  inst.alpha = 0.4;
  inst.x = {2, 2, 2, 2};
  auto tables = trip::binary_search(inst, 1e-6);
  REQUIRE(tables.early_exit.has_value());
  CHECK(tables.early_exit->d == trip::StepVector{0, 0, 0, 0});
  CHECK(tables.early_exit->objective == 0.0);

  // With jumps in x the cheapest relaxed path flattens them; here that
  // needs 2 + 3 = 5 units, more than the budget of 3.
  inst.x = {0, 2, 2, -1};
  tables = trip::binary_search(inst, 1e-6);
  CHECK(tables.log.front().path_resource == 5);
  CHECK_FALSE(tables.log.front().action == "early_exit");
}

TEST_CASE("relaxed objective") {
  std::mt19937_64 rng(32);
  for (int rep = 0; rep < 100; ++rep) {
    TripInstance inst = trip::testing::small_instance(rng);
    trip::StepVector d(inst.n);
    for (int i = 0; i < inst.n; ++i) d[i] = inst.xi[rng() % inst.xi.size()] - inst.x[i];
    CHECK(trip::relaxed_objective(inst, d, 0.0) == trip::objective(inst, d));
    inst.delta = trip::resource(inst, d);
    CHECK(trip::relaxed_objective(inst, d, 2.5) == doctest::Approx(trip::objective(inst, d)).epsilon(1e-12));
  }
}

TEST_CASE("relaxed optimum is the zero step at the initial upper multiplier") {
  std::mt19937_64 rng(33);
  for (int rep = 0; rep < 100; ++rep) {
    const TripInstance inst = trip::testing::small_instance(rng);
    double c_max = 0.0;
    for (double v : inst.c) c_max = std::max(c_max, std::abs(v));
    const double lambda = c_max + 2.0 * inst.alpha;
    const Best all = enumerate_suffixes(inst, 0, 0, lambda);
    const double at_zero = trip::relaxed_objective(inst, trip::StepVector(inst.n, 0), lambda);
    CHECK(std::abs(all.cost - lambda * static_cast<double>(inst.delta) - at_zero) <= 1e-9);
  }
}

TEST_CASE("bisection starts at max|c| + 2 alpha") {
  TripInstance inst;
  inst.n = 3;
  inst.xi = {0, 1, 2};
  inst.x = {0, 0, 0};
  inst.gamma = {1, 1, 1};
  inst.c = {-3.0, -1.0, 2.0};
  inst.alpha = 0.5;
  inst.delta = 1;
  inst = trip::validate(inst);
  const auto tables = trip::binary_search(inst, 1e-6);
  REQUIRE(tables.log.size() >= 2);
  CHECK(tables.log[0].lambda == 0.0);
  CHECK(tables.log[1].lambda == 4.0);
  CHECK(tables.lambdas.front() == 0.0);
  CHECK_THROWS_AS(trip::binary_search(inst, 0.0), trip::Error);

  std::ostringstream csv;
  trip::write_dual_csv(tables, csv);
  CHECK(csv.str().rfind("lambda,dual_value,path_resource,path_cost,action\n", 0) == 0);
}

TEST_CASE("bisection bounds bracket the optimum") {
  std::mt19937_64 rng(34);
  for (int rep = 0; rep < 300; ++rep) {
    const TripInstance inst = trip::testing::small_instance(rng);
    const double opt = trip::testing::brute_minimum(inst);
    const auto tables = trip::binary_search(inst, 1e-6);
    CHECK(tables.upper_bound >= opt - 1e-9);
    for (const auto& t : tables.tables) CHECK(t.dual_value(inst.delta) <= opt + 1e-9);
    if (tables.early_exit) CHECK(std::abs(tables.early_exit->objective - opt) <= 1e-9);
    if (tables.incumbent) {
      CHECK(trip::is_feasible(inst, tables.incumbent->d));
      CHECK(tables.incumbent->objective == tables.upper_bound);
    }
    CHECK(std::is_sorted(tables.lambdas.begin(), tables.lambdas.end()));
  }
}

TEST_CASE("combined heuristic is consistent and vanishes at the sink") {
  std::mt19937_64 rng(35);
  for (int rep = 0; rep < 60; ++rep) {
    const TripInstance inst = trip::testing::small_instance(rng, 7, 4, 8);
    const auto tables = trip::binary_search(inst, 1e-6);
    const auto g = trip::build_explicit(trip::clamp_delta(inst));
    CHECK(tables.heuristic(trip::sink_node(inst)) == 0.0);
    for (const auto& a : g.arcs) {
      const double slack = a.weight + tables.heuristic(g.nodes[a.to]) - tables.heuristic(g.nodes[a.from]);
      CHECK(slack >= -1e-9);
    }
  }
}
