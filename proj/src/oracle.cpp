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

#include "trip/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

namespace trip {

Solution solve_bruteforce(const TripInstance& inst, int64_t cap) {
  const int m = inst.num_values();
  double count = std::pow(static_cast<double>(m), inst.n);
  if (count > static_cast<double>(cap)) throw Error("brute force enumeration exceeds cap");

  std::vector<int> digit(inst.n, 0);
  StepVector d(inst.n);
  StepVector best;
  double best_cost = std::numeric_limits<double>::infinity();
  SolverStats stats;
  while (true) {
    for (int i = 0; i < inst.n; ++i) d[i] = inst.shift(i + 1, digit[i]);
    ++stats.nodes_expanded;
    if (resource(inst, d) <= inst.delta) {
      const double cost = objective(inst, d);
      // Digits run most-significant first, so d ascends lexicographically.
      if (cost < best_cost) {
        best_cost = cost;
        best = d;
      }
    }
    int i = inst.n - 1;
    while (i >= 0 && ++digit[i] == m) digit[i--] = 0;
    if (i < 0) break;
  }
  return make_solution(inst, std::move(best), stats);
}

KnapsackReduction knapsack_reduce(const KnapsackItems& items, double alpha) {
  if (items.values.size() != items.weights.size()) throw Error("values and weights differ in length");
  if (items.budget < 1) throw Error("budget must be positive");
  if (!(alpha > 0.0)) throw Error("alpha must be positive");
  KnapsackReduction red;
  std::vector<double> values;
  for (size_t i = 0; i < items.weights.size(); ++i) {
    if (items.weights[i] < 1 || !(items.values[i] > 0.0)) throw Error("items need positive values and weights");
    if (items.weights[i] > items.budget) continue;
    red.kept_items.push_back(static_cast<int>(i));
    red.weights.push_back(items.weights[i]);
    values.push_back(items.values[i]);
  }
  const int k = static_cast<int>(red.weights.size());
  if (k == 0) throw Error("no item fits the budget");

  TripInstance& inst = red.instance;
  inst.delta = items.budget;
  inst.n = 2 * k + 1;
  inst.alpha = alpha;
  const int64_t step = items.budget + 1;

  // prefix[q] = w_1 + ... + w_q.
  std::vector<int64_t> prefix(k + 1, 0);
  for (int q = 0; q < k; ++q) prefix[q + 1] = prefix[q] + red.weights[q];
  std::vector<int64_t> xi;
  for (int q = 0; q < k; ++q) xi.push_back(prefix[q] + (q + 1) * step);
  for (int q = 0; q <= k; ++q) xi.push_back(prefix[q] + q * step);
  std::sort(xi.begin(), xi.end());
  if (std::adjacent_find(xi.begin(), xi.end()) != xi.end()) {
    throw Error("knapsack reduction produced duplicate values");
  }
  inst.xi = std::move(xi);

  inst.x.assign(inst.n, 0);
  inst.c.assign(inst.n, 0.0);
  inst.gamma.assign(inst.n, 1);
  for (int i = 1; i <= inst.n; ++i) {
    if (i % 2 != 0) continue;
    const int q = i / 2;  // 1-based item
    inst.x[i - 1] = prefix[q - 1] + q * step;
    inst.c[i - 1] = -values[q - 1] / static_cast<double>(red.weights[q - 1]) - 2.0 * alpha;
  }
  red.instance = validate(std::move(red.instance));
  return red;
}

std::vector<int> extract_knapsack(const KnapsackReduction& reduction,
                                  const StepVector& d) {
  std::vector<int> chosen;
  const int k = static_cast<int>(reduction.weights.size());
  if (d.size() != static_cast<size_t>(2 * k + 1)) throw Error("step vector does not match the reduction");
  for (int q = 1; q <= k; ++q) {
    const int64_t step = d[2 * q - 1];
    if (step == reduction.weights[q - 1]) {
      chosen.push_back(reduction.kept_items[q - 1]);
    } else if (step != 0) {
      throw Error("interval " + std::to_string(2 * q) + " moved by " + std::to_string(step) +
                  ", expected 0 or the item weight");
    }
  }
  return chosen;
}

double knapsack_bruteforce(const KnapsackItems& items, std::vector<int>* selection) {
  const int k = static_cast<int>(items.values.size());
  if (k > 30) throw Error("too many items for subset enumeration");
  double best = 0.0;
  uint64_t best_mask = 0;
  for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
    int64_t weight = 0;
    double value = 0.0;
    for (int i = 0; i < k; ++i) {
      if (mask >> i & 1) {
        weight += items.weights[i];
        value += items.values[i];
      }
    }
    if (weight <= items.budget && value > best) {
      best = value;
      best_mask = mask;
    }
  }
  if (selection) {
    selection->clear();
    for (int i = 0; i < k; ++i) {
      if (best_mask >> i & 1) selection->push_back(i);
    }
  }
  return best;
}

TripInstance gen_random(int n, int m, int64_t delta, double alpha, uint64_t seed) {
  if (n < 1 || m < 1) throw Error("gen_random needs n >= 1 and m >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int64_t> value_draw(-2 * m, 2 * m);
  std::set<int64_t> values;
  while (static_cast<int>(values.size()) < m) values.insert(value_draw(rng));

  TripInstance inst;
  inst.n = n;
  inst.alpha = alpha;
  inst.delta = delta;
  inst.xi.assign(values.begin(), values.end());
  std::uniform_int_distribution<int> pick(0, m - 1);
  std::uniform_int_distribution<int64_t> gamma_draw(1, 3);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int i = 0; i < n; ++i) {
    inst.x.push_back(inst.xi[pick(rng)]);
    inst.c.push_back(normal(rng));
    inst.gamma.push_back(gamma_draw(rng));
  }
  return validate(std::move(inst));
}

}  // namespace trip
