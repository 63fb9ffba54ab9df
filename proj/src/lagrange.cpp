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

#include "trip/lagrange.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "trip/simd/kernels.hpp"

namespace trip {
namespace {

struct Choice {
  double min_cost = std::numeric_limits<double>::infinity();
  double chosen_cost = std::numeric_limits<double>::infinity();
  int64_t chosen_resource = 0;
  int chosen = -1;

  void offer(double cost, int64_t res, int j) {
    min_cost = std::min(min_cost, cost);
    if (chosen < 0 || cost < chosen_cost - kDualTolerance ||
        (cost <= chosen_cost + kDualTolerance && res < chosen_resource)) {
      chosen_cost = cost;
      chosen_resource = res;
      chosen = j;
    }
  }
};

}  // namespace

StepVector RelaxedTable::extract_path(const TripInstance& inst) const {
  StepVector d(n);
  int j = source_next;
  for (int layer = 1; layer <= n; ++layer) {
    d[layer - 1] = inst.shift(layer, j);
    j = next[index(layer, j)];
  }
  return d;
}

RelaxedTable relaxed_costs_to_sink(const TripInstance& inst, double lambda) {
  const int n = inst.n;
  const int m = inst.num_values();
  RelaxedTable t;
  t.lambda = lambda;
  t.n = n;
  t.num_values = m;
  t.cost.assign(static_cast<size_t>(n) * m, 0.0);
  t.resource.assign(static_cast<size_t>(n) * m, 0);
  t.next.assign(static_cast<size_t>(n) * m, -1);

  std::vector<int64_t> shift(m);
  std::vector<int64_t> use(m);
  std::vector<double> penalty(m);
  std::vector<double> linear(m);
  for (int layer = n - 1; layer >= 1; --layer) {
    const int to = layer + 1;
    for (int jv = 0; jv < m; ++jv) {
      shift[jv] = inst.shift(to, jv);
      use[jv] = inst.gamma[to - 1] * std::abs(shift[jv]);
      penalty[jv] = lambda * static_cast<double>(use[jv]);
      linear[jv] = inst.c[to - 1] * static_cast<double>(shift[jv]);
    }
    for (int j = 0; j < m; ++j) {
      Choice best;
      for (int jv = 0; jv < m; ++jv) {
        // Same arithmetic as edge_weight: the jump is xi_jv - xi_j.
        const double arc =
            (linear[jv] + inst.alpha * static_cast<double>(std::abs(inst.xi[jv] - inst.xi[j]))) +
            penalty[jv];
        const size_t k = t.index(to, jv);
        best.offer(arc + t.cost[k], use[jv] + t.resource[k], jv);
      }
      const size_t k = t.index(layer, j);
      t.cost[k] = best.min_cost;
      t.resource[k] = best.chosen_resource;
      t.next[k] = best.chosen;
    }
  }

  Choice best;
  for (int jv = 0; jv < m; ++jv) {
    const int64_t delta_v = inst.shift(1, jv);
    const int64_t u = inst.gamma[0] * std::abs(delta_v);
    const double arc = edge_weight(inst, 0, 0, delta_v) + lambda * static_cast<double>(u);
    const size_t k = t.index(1, jv);
    best.offer(arc + t.cost[k], u + t.resource[k], jv);
  }
  t.source_cost = best.min_cost;
  t.source_resource = best.chosen_resource;
  t.source_next = best.chosen;
  return t;
}

double relaxed_objective(const TripInstance& inst, std::span<const int64_t> d,
                         double lambda) {
  return objective(inst, d) +
         lambda * static_cast<double>(resource(inst, d) - inst.delta);
}

double LagrangeTables::heuristic(const NodeRef& node) const {
  if (node.layer > n) return 0.0;
  const double cap = static_cast<double>(node.capacity);
  const size_t count = lambdas.size();
  if (node.layer == 0) {
    return simd::kernels().max_affine(source_by_lambda.data(), lambdas.data(), count, cap);
  }
  const size_t cls = static_cast<size_t>(node.layer - 1) * num_values + node.value_index;
  return simd::kernels().max_affine(zeta_by_class.data() + cls * count,
                                    lambdas.data(), count, cap);
}

LagrangeTables binary_search(const TripInstance& original, double epsilon) {
  if (!(epsilon > 0.0)) throw Error("epsilon must be positive");
  const TripInstance inst = clamp_delta(original);
  LagrangeTables out;
  out.n = inst.n;
  out.num_values = inst.num_values();

  double c_max = 0.0;
  for (double v : inst.c) c_max = std::max(c_max, std::abs(v));
  double upper = c_max + 2.0 * inst.alpha;
  double lower = 0.0;
  out.upper_bound = std::numeric_limits<double>::infinity();

  SolverStats no_stats;
  auto offer_incumbent = [&](const StepVector& d, double cost) {
    if (cost < out.upper_bound) {
      out.upper_bound = cost;
      out.incumbent = make_solution(original, d, no_stats);
    }
  };
  // Evaluates one multiplier; returns the extracted path and its resource.
  auto evaluate = [&](double lambda) {
    out.tables.push_back(relaxed_costs_to_sink(inst, lambda));
    const RelaxedTable& t = out.tables.back();
    StepVector d = t.extract_path(inst);
    DualIteration it;
    it.lambda = lambda;
    it.dual_value = t.dual_value(inst.delta);
    it.path_resource = resource(inst, d);
    it.path_cost = objective(inst, d);
    it.action = "probe";
    out.log.push_back(it);
    return d;
  };
  auto exit_with = [&](const StepVector& d, double lambda) {
    out.early_exit = make_solution(original, d, no_stats);
    out.lambda_star = lambda;
    out.log.back().action = "early_exit";
    offer_incumbent(d, out.early_exit->objective);
  };

  const StepVector d0 = evaluate(0.0);
  const int64_t r0 = out.log.back().path_resource;
  if (r0 <= inst.delta) {
    // The unconstrained optimum already fits the budget.
    exit_with(d0, 0.0);
  }
  if (upper > 0.0) {
    const StepVector du = evaluate(upper);
    const int64_t ru = out.log.back().path_resource;
    if (ru <= inst.delta) offer_incumbent(du, out.log.back().path_cost);
    if (!out.early_exit && ru == inst.delta) exit_with(du, upper);
  }

  while (!out.early_exit && upper - lower >= epsilon) {
    const double lambda = lower + (upper - lower) / 2.0;
    ++out.iterations;
    const StepVector d = evaluate(lambda);
    DualIteration& rec = out.log.back();
    if (rec.path_resource > inst.delta) {
      lower = lambda;
      rec.action = "raise_lower";
    } else if (rec.path_resource == inst.delta) {
      exit_with(d, lambda);
    } else {
      upper = lambda;
      rec.action = "lower_upper";
      offer_incumbent(d, rec.path_cost);
    }
  }
  out.bracket_lower = lower;
  out.bracket_upper = upper;
  if (!out.early_exit) out.lambda_star = lower + (upper - lower) / 2.0;

  std::vector<size_t> order(out.tables.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return out.tables[a].lambda < out.tables[b].lambda;
  });
  std::vector<RelaxedTable> sorted;
  sorted.reserve(order.size());
  for (size_t k : order) sorted.push_back(std::move(out.tables[k]));
  out.tables = std::move(sorted);

  const size_t count = out.tables.size();
  const size_t classes = static_cast<size_t>(inst.n) * inst.num_values();
  out.lambdas.resize(count);
  out.source_by_lambda.resize(count);
  out.zeta_by_class.resize(classes * count);
  for (size_t l = 0; l < count; ++l) {
    const RelaxedTable& t = out.tables[l];
    out.lambdas[l] = t.lambda;
    out.source_by_lambda[l] = t.source_cost;
    for (size_t cls = 0; cls < classes; ++cls) {
      out.zeta_by_class[cls * count + l] = t.cost[cls];
    }
  }
  return out;
}

void write_dual_csv(const LagrangeTables& tables, std::ostream& out) {
  out << "lambda,dual_value,path_resource,path_cost,action\n";
  out.precision(17);
  for (const auto& it : tables.log) {
    out << it.lambda << ',' << it.dual_value << ',' << it.path_resource << ','
        << it.path_cost << ',' << it.action << '\n';
  }
}

}  // namespace trip
