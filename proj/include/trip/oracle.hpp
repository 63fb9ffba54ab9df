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

#ifndef TRIP_ORACLE_HPP_
#define TRIP_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "trip/instance.hpp"

namespace trip {

inline constexpr int64_t kDefaultBruteForceCap = int64_t{1} << 20;

// Exhaustive enumeration of all |xi|^n step vectors in mixed-radix order.
// Ties go to the lexicographically smallest d. Throws Error above cap.
Solution solve_bruteforce(const TripInstance& inst,
                          int64_t cap = kDefaultBruteForceCap);

struct KnapsackItems {
  std::vector<double> values;   // positive
  std::vector<int64_t> weights;  // positive
  int64_t budget = 0;
};

// Reduced instance plus the bookkeeping needed to read a selection back.
struct KnapsackReduction {
  TripInstance instance;
  std::vector<int> kept_items;      // original index of each reduced item
  std::vector<int64_t> weights;     // weight of each reduced item
};

// Encodes a 0/1 knapsack as a uniform-mesh instance with n = 2k + 1
// intervals: odd intervals are pinned to 0, interval 2i can only move by 0 or
// by the weight of item i. Items heavier than the budget are dropped first.
KnapsackReduction knapsack_reduce(const KnapsackItems& items, double alpha);

// Item selection (original indices) encoded by d. Throws Error when some
// d_{2i} is neither 0 nor the item's weight.
std::vector<int> extract_knapsack(const KnapsackReduction& reduction,
                                  const StepVector& d);

// Best total value by enumerating all subsets.
double knapsack_bruteforce(const KnapsackItems& items,
                           std::vector<int>* selection = nullptr);

// Reproducible random instance: xi = m distinct integers, x uniform over xi,
// c standard normal, gamma in {1, 2, 3}.
TripInstance gen_random(int n, int m, int64_t delta, double alpha, uint64_t seed);

}  // namespace trip

#endif  // TRIP_ORACLE_HPP_
