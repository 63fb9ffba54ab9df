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

#include <random>
#include <string>

#include "doctest.h"
#include "support.hpp"
#include "trip/instance.hpp"

using trip::TripInstance;

namespace {

TripInstance fig1() {
  TripInstance inst;
  inst.n = 2;
  inst.xi = {0, 1};
  inst.x = {0, 0};
  inst.gamma = {1, 1};
  inst.c = {0.0, 0.0};
  inst.alpha = 1.0;
  inst.delta = 2;
  return inst;
}

std::string error_of(const TripInstance& raw) {
  try {
    trip::validate(raw);
  } catch (const trip::Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("validate accepts the two-interval example") {
  CHECK_NOTHROW(trip::validate(fig1()));
}

TEST_CASE("validate names every violation") {
  TripInstance bad = fig1();
  bad.x = {0, 2};
  CHECK(error_of(bad).find("x_2 not in xi") != std::string::npos);

  bad = fig1();
  bad.xi = {1, 0};
  CHECK(error_of(bad).find("xi not strictly ascending") != std::string::npos);

  bad = fig1();
  bad.gamma = {1, 0};
  bad.delta = -1;
  bad.c = {0.0};
  const std::string msg = error_of(bad);
  CHECK(msg.find("gamma_2 < 1") != std::string::npos);
  CHECK(msg.find("delta must be nonnegative") != std::string::npos);
  CHECK(msg.find("c has length 1") != std::string::npos);
}

TEST_CASE("clamp_delta") {
  TripInstance inst = fig1();
  inst.delta = 100;
  CHECK(trip::clamp_delta(inst).delta == 2);
  inst.delta = 1;
  CHECK(trip::clamp_delta(inst).delta == 1);

  TripInstance big;
  big.n = 512;
  for (int64_t v = -2; v <= 23; ++v) big.xi.push_back(v);
  big.x.assign(512, 0);
  big.gamma.assign(512, 1);
  big.c.assign(512, 0.0);
  big.delta = 1'000'000;
  big = trip::validate(big);
  const TripInstance once = trip::clamp_delta(big);
  CHECK(once.delta == 25 * 512);
  CHECK(trip::clamp_delta(once).delta == once.delta);
}

TEST_CASE("objective and feasibility on small examples") {
  TripInstance three;
  three.n = 3;
  three.xi = {0, 1};
  three.x = {0, 0, 0};
  three.gamma = {1, 1, 1};
  three.c = {-1.0, 2.0, -1.0};
  three.alpha = 0.5;
  three.delta = 2;
  three = trip::validate(three);
  const std::vector<int64_t> best{1, 0, 1};
  CHECK(trip::objective(three, best) == -1.0);
  CHECK(trip::testing::brute_minimum(three) == -1.0);

  TripInstance two = fig1();
  two.c = {0.0, 0.75};
  two.alpha = 0.25;
  CHECK(trip::objective(two, std::vector<int64_t>{0, 1}) == 0.75 + 0.25);

  two = fig1();
  CHECK(trip::is_feasible(two, std::vector<int64_t>{0, 0}));
  CHECK(trip::is_feasible(two, std::vector<int64_t>{1, 1}));
  two.delta = 1;
  CHECK_FALSE(trip::is_feasible(two, std::vector<int64_t>{1, 1}));
  CHECK_FALSE(trip::is_feasible(two, std::vector<int64_t>{-1, 0}));
  CHECK_THROWS_AS(trip::objective(two, std::vector<int64_t>{0}), trip::Error);
}

TEST_CASE("total variation") {
  CHECK(trip::total_variation(std::vector<int64_t>{3, 3, 3}) == 0.0);
  CHECK(trip::total_variation(std::vector<int64_t>{0, 1, 0}) == 2.0);
  CHECK(trip::total_variation(std::vector<int64_t>{-2, 23}) == 25.0);
}

TEST_CASE("zero step and translation invariance") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 200; ++rep) {
    const TripInstance inst = trip::testing::small_instance(rng);
    const std::vector<int64_t> zero(inst.n, 0);
    CHECK(trip::is_feasible(inst, zero));
    CHECK(trip::objective(inst, zero) ==
          doctest::Approx(inst.alpha * trip::total_variation(inst.x)).epsilon(1e-12));

    TripInstance moved = inst;
    for (auto& v : moved.xi) v += 7;
    for (auto& v : moved.x) v += 7;
    std::vector<int64_t> d(inst.n);
    for (int i = 0; i < inst.n; ++i) d[i] = inst.xi[rng() % inst.xi.size()] - inst.x[i];
    CHECK(trip::objective(moved, d) == trip::objective(inst, d));
  }
}

TEST_CASE("instance JSON round trip") {
  const TripInstance inst = trip::validate(fig1());
  const std::string text = trip::write_instance(inst);
  CHECK(text.find("\"xi\":[0,1]") != std::string::npos);
  CHECK(trip::write_instance(trip::read_instance(text)) == text);

  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 50; ++rep) {
    const TripInstance r = trip::testing::small_instance(rng);
    const TripInstance back = trip::read_instance(trip::write_instance(r));
    CHECK(back.c == r.c);
    CHECK(back.x == r.x);
    CHECK(back.alpha == r.alpha);
  }
}

TEST_CASE("instance JSON errors") {
  std::string missing = R"({"n":1,"delta":0,"xi":[0],"x":[0],"gamma":[1],"c":[0]})";
  try {
    trip::read_instance(missing);
    FAIL("no error");
  } catch (const trip::Error& e) {
    CHECK(std::string(e.what()).find("\"alpha\"") != std::string::npos);
  }
  CHECK_THROWS_AS(trip::read_instance("{not json"), trip::Error);
  CHECK_THROWS_AS(trip::read_instance(R"({"n":1,"alpha":0,"delta":0,"xi":[0],"x":[3],"gamma":[1],"c":[0]})"),
                  trip::Error);
}
