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

#ifndef TRIP_BENCH_HPP_
#define TRIP_BENCH_HPP_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "trip/instance.hpp"

namespace trip {

struct CorpusEntry {
  int64_t id = 0;
  std::string origin;  // file:record
  TripInstance instance;
};

std::vector<CorpusEntry> load_corpus(const std::vector<std::string>& trace_paths);

struct BenchRow {
  int64_t instance_id = 0;
  int n = 0;
  int64_t delta = 0;
  double alpha = 0.0;
  std::string solver;
  double wall_seconds = 0.0;
  int64_t nodes_expanded = 0;
  double objective = 0.0;
};

// Solves one instance with "topo", "astar" or "oracle".
Solution solve_named(const TripInstance& inst, const std::string& solver);

// Worker count from TRIP_WORKERS, else the hardware concurrency.
int default_workers();

// Replays every entry through every solver. Rows come back ordered by
// instance id, then by the order of solvers. Throws Error when two solvers
// disagree on an objective by more than 1e-6 relative.
std::vector<BenchRow> run_bench(const std::vector<CorpusEntry>& corpus,
                                const std::vector<std::string>& solvers,
                                int workers = 0);

// Total time when topo handles delta < delta_d and A* the rest, using the
// timings already in rows.
double hybrid_time(const std::vector<BenchRow>& rows, int64_t delta_d);
double solver_time(const std::vector<BenchRow>& rows, const std::string& solver);

void write_csv(const std::vector<BenchRow>& rows, std::ostream& out);

}  // namespace trip

#endif  // TRIP_BENCH_HPP_
