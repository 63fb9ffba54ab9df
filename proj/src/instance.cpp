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

#include "trip/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace trip {

int TripInstance::zero_index(int layer) const {
  const auto it = std::lower_bound(xi.begin(), xi.end(), x[layer - 1]);
  return static_cast<int>(it - xi.begin());
}

TripInstance validate(TripInstance raw) {
  std::vector<std::string> problems;
  const auto n = static_cast<size_t>(std::max(raw.n, 0));
  if (raw.n < 1) problems.push_back("n must be positive");
  if (raw.c.size() != n) problems.push_back("c has length " + std::to_string(raw.c.size()) + ", expected n");
  if (raw.x.size() != n) problems.push_back("x has length " + std::to_string(raw.x.size()) + ", expected n");
  if (raw.gamma.size() != n) problems.push_back("gamma has length " + std::to_string(raw.gamma.size()) + ", expected n");
  if (raw.xi.empty()) problems.push_back("xi is empty");
  for (size_t j = 1; j < raw.xi.size(); ++j) {
    if (raw.xi[j - 1] >= raw.xi[j]) {
      problems.push_back("xi not strictly ascending");
      break;
    }
  }
  if (raw.delta < 0) problems.push_back("delta must be nonnegative");
  if (!(raw.alpha >= 0.0) || !std::isfinite(raw.alpha)) problems.push_back("alpha must be finite and nonnegative");
  for (size_t i = 0; i < raw.c.size(); ++i) {
    if (!std::isfinite(raw.c[i])) problems.push_back("c_" + std::to_string(i + 1) + " is not finite");
  }
  for (size_t i = 0; i < raw.gamma.size(); ++i) {
    if (raw.gamma[i] < 1) problems.push_back("gamma_" + std::to_string(i + 1) + " < 1");
  }
  for (size_t i = 0; i < raw.x.size(); ++i) {
    if (std::find(raw.xi.begin(), raw.xi.end(), raw.x[i]) == raw.xi.end()) {
      problems.push_back("x_" + std::to_string(i + 1) + " not in xi");
    }
  }
  if (raw.xi.size() > 65535) problems.push_back("xi has more than 65535 values");
  if (!problems.empty()) {
    std::string msg = "invalid instance:";
    for (const auto& p : problems) msg += " " + p + ";";
    msg.pop_back();
    throw Error(msg);
  }
  return raw;
}

int64_t delta_bound(const TripInstance& inst) {
  const int64_t span = inst.xi.back() - inst.xi.front();
  const int64_t gmax = *std::max_element(inst.gamma.begin(), inst.gamma.end());
  return span * gmax * inst.n;
}

TripInstance clamp_delta(TripInstance inst) {
  inst.delta = std::min(inst.delta, delta_bound(inst));
  return inst;
}

double objective(const TripInstance& inst, std::span<const int64_t> d) {
  if (d.size() != static_cast<size_t>(inst.n)) {
    throw Error("step vector has length " + std::to_string(d.size()) +
                ", expected " + std::to_string(inst.n));
  }
  // Summed edge by edge, the same way a path weight accumulates.
  double total = inst.c[0] * static_cast<double>(d[0]);
  for (int i = 1; i < inst.n; ++i) {
    const int64_t jump = inst.x[i] + d[i] - inst.x[i - 1] - d[i - 1];
    total += inst.c[i] * static_cast<double>(d[i]) +
             inst.alpha * static_cast<double>(std::abs(jump));
  }
  return total;
}

int64_t resource(const TripInstance& inst, std::span<const int64_t> d) {
  int64_t used = 0;
  for (int i = 0; i < inst.n; ++i) used += inst.gamma[i] * std::abs(d[i]);
  return used;
}

bool is_feasible(const TripInstance& inst, std::span<const int64_t> d) {
  if (d.size() != static_cast<size_t>(inst.n)) return false;
  for (int i = 0; i < inst.n; ++i) {
    if (!std::binary_search(inst.xi.begin(), inst.xi.end(), inst.x[i] + d[i])) return false;
  }
  return resource(inst, d) <= inst.delta;
}

double total_variation(std::span<const int64_t> x) {
  int64_t tv = 0;
  for (size_t i = 1; i < x.size(); ++i) tv += std::abs(x[i] - x[i - 1]);
  return static_cast<double>(tv);
}

Solution make_solution(const TripInstance& inst, StepVector d,
                       const SolverStats& stats) {
  Solution sol;
  sol.objective = objective(inst, d);
  sol.resource = resource(inst, d);
  sol.d = std::move(d);
  sol.stats = stats;
  return sol;
}

nlohmann::json instance_to_json(const TripInstance& inst) {
  nlohmann::json doc;
  doc["n"] = inst.n;
  doc["alpha"] = inst.alpha;
  doc["delta"] = inst.delta;
  doc["xi"] = inst.xi;
  doc["x"] = inst.x;
  doc["gamma"] = inst.gamma;
  doc["c"] = inst.c;
  return doc;
}

namespace {

const nlohmann::json& field(const nlohmann::json& doc, const char* name) {
  const auto it = doc.find(name);
  if (it == doc.end()) throw Error(std::string("missing field \"") + name + "\"");
  return *it;
}

int64_t integer_field(const nlohmann::json& doc, const char* name) {
  const auto& v = field(doc, name);
  if (!v.is_number_integer()) throw Error(std::string("field \"") + name + "\" must be an integer");
  return v.get<int64_t>();
}

std::vector<int64_t> integer_array(const nlohmann::json& doc, const char* name) {
  const auto& v = field(doc, name);
  if (!v.is_array()) throw Error(std::string("field \"") + name + "\" must be an array");
  std::vector<int64_t> out;
  out.reserve(v.size());
  for (const auto& e : v) {
    if (!e.is_number_integer()) throw Error(std::string("field \"") + name + "\" must hold integers");
    out.push_back(e.get<int64_t>());
  }
  return out;
}

}  // namespace

TripInstance instance_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error("instance document must be a JSON object");
  TripInstance raw;
  raw.n = static_cast<int>(integer_field(doc, "n"));
  const auto& alpha = field(doc, "alpha");
  if (!alpha.is_number()) throw Error("field \"alpha\" must be a number");
  raw.alpha = alpha.get<double>();
  raw.delta = integer_field(doc, "delta");
  raw.xi = integer_array(doc, "xi");
  raw.x = integer_array(doc, "x");
  raw.gamma = integer_array(doc, "gamma");
  const auto& c = field(doc, "c");
  if (!c.is_array()) throw Error("field \"c\" must be an array");
  for (const auto& e : c) {
    if (!e.is_number()) throw Error("field \"c\" must hold numbers");
    raw.c.push_back(e.get<double>());
  }
  return validate(std::move(raw));
}

std::string write_instance(const TripInstance& inst) {
  nlohmann::ordered_json doc;
  doc["n"] = inst.n;
  doc["alpha"] = inst.alpha;
  doc["delta"] = inst.delta;
  doc["xi"] = inst.xi;
  doc["x"] = inst.x;
  doc["gamma"] = inst.gamma;
  doc["c"] = inst.c;
  return doc.dump();
}

TripInstance read_instance(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("malformed instance document: ") + e.what());
  }
  return instance_from_json(doc);
}

TripInstance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open instance file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return read_instance(buf.str());
}

nlohmann::json stats_to_json(const SolverStats& stats, bool with_timing) {
  nlohmann::json doc;
  doc["nodes_expanded"] = stats.nodes_expanded;
  doc["nodes_generated"] = stats.nodes_generated;
  doc["edges_processed"] = stats.edges_processed;
  doc["preprocessing_iterations"] = stats.preprocessing_iterations;
  if (with_timing) doc["wall_seconds"] = stats.wall_seconds;
  return doc;
}

nlohmann::json solution_to_json(const Solution& sol, bool with_timing) {
  nlohmann::json doc;
  doc["d"] = sol.d;
  doc["objective"] = sol.objective;
  doc["resource"] = sol.resource;
  doc["stats"] = stats_to_json(sol.stats, with_timing);
  return doc;
}

}  // namespace trip
