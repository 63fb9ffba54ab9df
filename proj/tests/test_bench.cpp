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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "trip/bench.hpp"

namespace {

// Writes instances as a trace file with one step record each.
std::string write_corpus(const std::string& path, const std::vector<trip::TripInstance>& list) {
  std::ofstream out(path);
  for (size_t k = 0; k < list.size(); ++k) {
    out << R"({"record":"step","id":)" << k << R"(,"instance":)" << trip::write_instance(list[k])
        << "}\n";
  }
  out << R"({"record":"final","status":"converged"})" << "\n";
  return path;
}

}  // namespace

TEST_CASE("bench replays a corpus through two solvers") {
  std::mt19937_64 rng(61);
  std::vector<trip::TripInstance> a, b;
  for (int k = 0; k < 60; ++k) a.push_back(trip::testing::small_instance(rng));
  for (int k = 0; k < 40; ++k) b.push_back(trip::testing::small_instance(rng));
  const auto first = write_corpus("bench_test_a.jsonl", a);
  const auto second = write_corpus("bench_test_b.jsonl", b);

  const auto corpus = trip::load_corpus({first, second});
  REQUIRE(corpus.size() == 100);
  CHECK(corpus[60].origin == "bench_test_b.jsonl:0");

  const auto rows = trip::run_bench(corpus, {"topo", "astar"}, 4);
  REQUIRE(rows.size() == 200);
  int64_t max_delta = 0;
  for (size_t k = 0; k < rows.size(); k += 2) {
    CHECK(rows[k].instance_id == static_cast<int64_t>(k / 2));
    CHECK(rows[k].solver == "topo");
    CHECK(rows[k + 1].solver == "astar");
    CHECK(std::abs(rows[k].objective - rows[k + 1].objective) <= 1e-9);
    max_delta = std::max(max_delta, rows[k].delta);
  }
  CHECK(trip::hybrid_time(rows, 0) == trip::solver_time(rows, "astar"));
  CHECK(trip::hybrid_time(rows, max_delta + 1) == trip::solver_time(rows, "topo"));

  // Same rows whatever the pool size, apart from timing.
  const auto serial = trip::run_bench(corpus, {"topo", "astar", "oracle"}, 1);
  REQUIRE(serial.size() == 300);
  for (size_t k = 0; k < 100; ++k) {
    CHECK(serial[3 * k].objective == rows[2 * k].objective);
    CHECK(serial[3 * k].nodes_expanded == rows[2 * k].nodes_expanded);
    CHECK(serial[3 * k + 1].nodes_expanded == rows[2 * k + 1].nodes_expanded);
  }

  std::ostringstream csv;
  trip::write_csv(rows, csv);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == "instance_id,N,delta,alpha,solver,wall_seconds,nodes_expanded,objective");
  int count = 0;
  for (std::string line; std::getline(lines, line);) ++count;
  CHECK(count == 200);

  CHECK_THROWS_AS(trip::run_bench(corpus, {"topo", "simplex"}), trip::Error);
  std::remove(first.c_str());
  std::remove(second.c_str());
}

TEST_CASE("worker count comes from the environment") {
  ::setenv("TRIP_WORKERS", "3", 1);
  CHECK(trip::default_workers() == 3);
  ::setenv("TRIP_WORKERS", "many", 1);
  CHECK_THROWS_AS(trip::default_workers(), trip::Error);
  ::unsetenv("TRIP_WORKERS");
  CHECK(trip::default_workers() >= 1);
}
