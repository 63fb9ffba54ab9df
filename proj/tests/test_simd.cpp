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
#include <cstring>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "trip/astar_solver.hpp"
#include "trip/oracle.hpp"
#include "trip/signal_problem.hpp"
#include "trip/simd/kernels.hpp"
#include "trip/topo_solver.hpp"

namespace simd = trip::simd;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> random_values(std::mt19937_64& rng, size_t len, bool with_inf) {
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  std::vector<double> v(len);
  for (auto& e : v) e = (with_inf && rng() % 5 == 0) ? kInf : u(rng);
  return v;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

std::vector<simd::Isa> available() {
  std::vector<simd::Isa> out{simd::Isa::kScalar};
  if (simd::isa_supported(simd::Isa::kAvx2)) out.push_back(simd::Isa::kAvx2);
  return out;
}

// Restores the default kernel set when a test leaves.
struct IsaGuard {
  simd::Isa saved = simd::active_isa();
  ~IsaGuard() { simd::set_active_isa(saved); }
};

}  // namespace

TEST_CASE("scalar kernels match naive loops") {
  const auto& k = simd::kernels(simd::Isa::kScalar);
  std::mt19937_64 rng(1);
  for (size_t len = 0; len < 70; ++len) {
    auto dst = random_values(rng, len, true);
    const auto src = random_values(rng, len, true);
    std::vector<uint16_t> pred(len, 7);
    auto expect = dst;
    std::vector<uint16_t> expect_pred = pred;
    for (size_t e = 0; e < len; ++e) {
      const double cand = src[e] + 1.5;
      if (cand < expect[e]) {
        expect[e] = cand;
        expect_pred[e] = 3;
      }
    }
    k.shifted_min(dst.data(), pred.data(), src.data(), len, 1.5, 3);
    CHECK(dst == expect);
    CHECK(pred == expect_pred);

    const auto a = random_values(rng, len, false);
    const auto b = random_values(rng, len, false);
    double naive = 0.0;
    double scale = 0.0;
    for (size_t e = 0; e < len; ++e) {
      naive += a[e] * b[e];
      scale += std::abs(a[e] * b[e]);
    }
    CHECK(std::abs(k.dot(a.data(), b.data(), len) - naive) <= 1e-13 * (1.0 + scale));

    double best = -kInf;
    for (size_t e = 0; e < len; ++e) best = std::max(best, a[e] - b[e] * 0.75);
    CHECK(k.max_affine(a.data(), b.data(), len, 0.75) == best);
  }
}

TEST_CASE("vector kernels are bit-identical to the scalar reference") {
  const auto& ref = simd::kernels(simd::Isa::kScalar);
  std::mt19937_64 rng(2);
  for (simd::Isa isa : available()) {
    CAPTURE(simd::isa_name(isa));
    const auto& k = simd::kernels(isa);
    for (size_t len = 0; len < 131; ++len) {
      auto d1 = random_values(rng, len, true);
      auto d2 = d1;
      const auto src = random_values(rng, len, true);
      std::vector<uint16_t> p1(len, 9), p2(len, 9);
      ref.shifted_min(d1.data(), p1.data(), src.data(), len, -0.25, 4);
      k.shifted_min(d2.data(), p2.data(), src.data(), len, -0.25, 4);
      for (size_t e = 0; e < len; ++e) CHECK(same_bits(d1[e], d2[e]));
      CHECK(p1 == p2);

      const auto a = random_values(rng, len, false);
      const auto b = random_values(rng, len, false);
      CHECK(same_bits(ref.dot(a.data(), b.data(), len), k.dot(a.data(), b.data(), len)));
      for (double x : {0.0, 1.0, 17.5}) {
        CHECK(same_bits(ref.max_affine(a.data(), b.data(), len, x),
                        k.max_affine(a.data(), b.data(), len, x)));
      }
    }
  }
}

TEST_CASE("unsupported kernel sets are refused") {
  if (!simd::isa_supported(simd::Isa::kAvx2)) {
    CHECK_THROWS_AS(simd::kernels(simd::Isa::kAvx2), trip::Error);
  }
  CHECK(std::string(simd::isa_name(simd::Isa::kScalar)) == "scalar");
}

TEST_CASE("solvers give identical results under every kernel set") {
  IsaGuard guard;
  std::mt19937_64 rng(3);
  std::vector<trip::TripInstance> corpus;
  for (int rep = 0; rep < 60; ++rep) corpus.push_back(trip::testing::small_instance(rng, 10, 5, 12));
  for (uint64_t seed = 0; seed < 10; ++seed) corpus.push_back(trip::gen_random(40, 9, 30, 0.3, seed));

  std::vector<trip::Solution> topo_ref, astar_ref;
  simd::set_active_isa(simd::Isa::kScalar);
  for (const auto& inst : corpus) {
    topo_ref.push_back(trip::solve_topo(inst));
    astar_ref.push_back(trip::solve_astar(inst));
  }
  const trip::SignalProblem signal(16, 4, 256);
  const std::vector<double> x(16, 1.0);
  const auto grad_ref = signal.gradient_coeffs(x);
  const double value_ref = signal.smooth_value(x);

  for (simd::Isa isa : available()) {
    CAPTURE(simd::isa_name(isa));
    simd::set_active_isa(isa);
    for (size_t k = 0; k < corpus.size(); ++k) {
      const auto topo = trip::solve_topo(corpus[k]);
      const auto astar = trip::solve_astar(corpus[k]);
      CHECK(topo.d == topo_ref[k].d);
      CHECK(same_bits(topo.objective, topo_ref[k].objective));
      CHECK(astar.d == astar_ref[k].d);
      CHECK(astar.stats.nodes_expanded == astar_ref[k].stats.nodes_expanded);
    }
    const auto grad = signal.gradient_coeffs(x);
    for (size_t i = 0; i < grad.size(); ++i) CHECK(same_bits(grad[i], grad_ref[i]));
    CHECK(same_bits(signal.smooth_value(x), value_ref));
  }
}
