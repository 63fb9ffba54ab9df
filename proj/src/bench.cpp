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

#include "trip/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include "trip/astar_solver.hpp"
#include "trip/oracle.hpp"
#include "trip/slip.hpp"
#include "trip/topo_solver.hpp"

namespace trip {

std::vector<CorpusEntry> load_corpus(const std::vector<std::string>& trace_paths) {
  std::vector<CorpusEntry> corpus;
  for (const auto& path : trace_paths) {
    const auto instances = read_trace_instances(path);
    for (size_t k = 0; k < instances.size(); ++k) {
      CorpusEntry e;
      e.id = static_cast<int64_t>(corpus.size());
      e.origin = path + ":" + std::to_string(k);
      e.instance = instances[k];
      corpus.push_back(std::move(e));
    }
  }
  return corpus;
}

Solution solve_named(const TripInstance& inst, const std::string& solver) {
  if (solver == "topo") return solve_topo(inst);
  if (solver == "astar") return solve_astar(inst);
  if (solver == "oracle") return solve_bruteforce(inst);
  throw Error("unknown solver \"" + solver + "\"");
}

int default_workers() {
  if (const char* env = std::getenv("TRIP_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(v);
    throw Error("TRIP_WORKERS must be a positive integer");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<BenchRow> run_bench(const std::vector<CorpusEntry>& corpus,
                                const std::vector<std::string>& solvers,
                                int workers) {
  if (solvers.empty()) throw Error("no solvers given");
  for (const auto& s : solvers) {
    if (s != "topo" && s != "astar" && s != "oracle") {
      throw Error("unknown solver \"" + s + "\"");
    }
  }
  if (workers <= 0) workers = default_workers();
  const size_t jobs = corpus.size() * solvers.size();
  std::vector<BenchRow> rows(jobs);
  std::vector<std::string> failures(jobs);
  std::atomic<size_t> next{0};

  auto worker = [&] {
    for (size_t job = next++; job < jobs; job = next++) {
      const CorpusEntry& e = corpus[job / solvers.size()];
      const std::string& solver = solvers[job % solvers.size()];
      BenchRow& row = rows[job];
      row.instance_id = e.id;
      row.n = e.instance.n;
      row.delta = e.instance.delta;
      row.alpha = e.instance.alpha;
      row.solver = solver;
      try {
        const auto start = std::chrono::steady_clock::now();
        Solution sol = solve_named(e.instance, solver);
        const auto stop = std::chrono::steady_clock::now();
        row.wall_seconds = std::chrono::duration<double>(stop - start).count();
        row.nodes_expanded = sol.stats.nodes_expanded;
        row.objective = sol.objective;
      } catch (const std::exception& ex) {
        failures[job] = e.origin + " (" + solver + "): " + ex.what();
      }
    }
  };
  std::vector<std::thread> pool;
  const int count = static_cast<int>(std::min<size_t>(workers, std::max<size_t>(jobs, 1)));
  for (int w = 0; w < count; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  for (const auto& f : failures) {
    if (!f.empty()) throw Error("solver failed on " + f);
  }
  for (size_t i = 0; i < corpus.size(); ++i) {
    const BenchRow& ref = rows[i * solvers.size()];
    for (size_t s = 1; s < solvers.size(); ++s) {
      const BenchRow& other = rows[i * solvers.size() + s];
      const double gap = std::abs(other.objective - ref.objective);
      if (gap > 1e-6 * std::max(1.0, std::abs(ref.objective))) {
        throw Error("objective mismatch on instance " + std::to_string(ref.instance_id) +
                    " (" + corpus[i].origin + "): " + ref.solver + "=" +
                    std::to_string(ref.objective) + " " + other.solver + "=" +
                    std::to_string(other.objective));
      }
    }
  }
  return rows;
}

double solver_time(const std::vector<BenchRow>& rows, const std::string& solver) {
  double total = 0.0;
  for (const auto& r : rows) {
    if (r.solver == solver) total += r.wall_seconds;
  }
  return total;
}

double hybrid_time(const std::vector<BenchRow>& rows, int64_t delta_d) {
  double total = 0.0;
  for (const auto& r : rows) {
    const bool topo = r.delta < delta_d;
    if ((topo && r.solver == "topo") || (!topo && r.solver == "astar")) {
      total += r.wall_seconds;
    }
  }
  return total;
}

void write_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "instance_id,N,delta,alpha,solver,wall_seconds,nodes_expanded,objective\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%lld,%d,%lld,%.17g,%s,%.9f,%lld,%.17g\n",
                  static_cast<long long>(r.instance_id), r.n,
                  static_cast<long long>(r.delta), r.alpha, r.solver.c_str(),
                  r.wall_seconds, static_cast<long long>(r.nodes_expanded), r.objective);
    out << buf;
  }
}

}  // namespace trip
