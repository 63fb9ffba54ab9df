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

#ifndef TRIP_TESTS_SUPPORT_HPP_
#define TRIP_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "trip/instance.hpp"

namespace trip::testing {

// Small random instance with |xi| <= max_m, delta <= max_delta and
// gamma in {1, 2, 3}. Independent of the library generator.
inline TripInstance small_instance(std::mt19937_64& rng, int max_n = 8, int max_m = 4,
                                   int64_t max_delta = 6) {
  std::uniform_int_distribution<int> pick_n(1, max_n);
  std::uniform_int_distribution<int> pick_m(1, max_m);
  std::uniform_int_distribution<int64_t> pick_delta(0, max_delta);
  std::uniform_int_distribution<int64_t> pick_value(-4, 4);
  std::uniform_int_distribution<int64_t> pick_gamma(1, 3);
  std::uniform_real_distribution<double> pick_c(-2.0, 2.0);
  std::uniform_real_distribution<double> pick_alpha(0.0, 1.5);

  TripInstance inst;
  inst.n = pick_n(rng);
  const int m = pick_m(rng);
  while (static_cast<int>(inst.xi.size()) < m) {
    const int64_t v = pick_value(rng);
    if (std::find(inst.xi.begin(), inst.xi.end(), v) == inst.xi.end()) inst.xi.push_back(v);
  }
  std::sort(inst.xi.begin(), inst.xi.end());
  std::uniform_int_distribution<int> pick_index(0, m - 1);
  for (int i = 0; i < inst.n; ++i) {
    inst.x.push_back(inst.xi[pick_index(rng)]);
    inst.gamma.push_back(pick_gamma(rng));
    // Coarse grid of coefficients makes ties between paths common.
    inst.c.push_back(rng() % 4 == 0 ? std::round(pick_c(rng) * 2.0) / 2.0 : pick_c(rng));
  }
  inst.alpha = rng() % 5 == 0 ? 0.0 : pick_alpha(rng);
  inst.delta = pick_delta(rng);
  return validate(std::move(inst));
}

// Exhaustive minimum of C(d) over feasible d, written without the library.
inline double brute_minimum(const TripInstance& inst) {
  const int n = inst.n;
  const int m = inst.num_values();
  std::vector<int> digit(n, 0);
  double best = 1e300;
  while (true) {
    int64_t use = 0;
    double cost = 0.0;
    for (int i = 0; i < n; ++i) {
      const int64_t d = inst.xi[digit[i]] - inst.x[i];
      use += inst.gamma[i] * (d < 0 ? -d : d);
      cost += inst.c[i] * static_cast<double>(d);
      if (i > 0) {
        const int64_t jump = inst.xi[digit[i]] - inst.xi[digit[i - 1]];
        cost += inst.alpha * static_cast<double>(jump < 0 ? -jump : jump);
      }
    }
    if (use <= inst.delta) best = std::min(best, cost);
    int k = 0;
    while (k < n && ++digit[k] == m) digit[k++] = 0;
    if (k == n) break;
  }
  return best;
}

}  // namespace trip::testing

#endif  // TRIP_TESTS_SUPPORT_HPP_
