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

#include "trip/heat_problem.hpp"

#include <cmath>

#include "trip/instance.hpp"

namespace trip {

double ControlProblem::value_at(std::span<const int64_t> x) const {
  const auto real = to_real(x);
  return smooth_value(real);
}

std::vector<double> ControlProblem::gradient_at(std::span<const int64_t> x) const {
  const auto real = to_real(x);
  return gradient_coeffs(real);
}

std::vector<double> to_real(std::span<const int64_t> x) {
  return std::vector<double>(x.begin(), x.end());
}

namespace {

constexpr double kLeft = -1.0;
constexpr double kJump = 0.05;
constexpr double kEpsLeft = 0.1;
constexpr double kEpsRight = 10.0;

double source(double t) { return std::exp(-(t + 0.4) * (t + 0.4)); }

// h / integral of 1/eps over [a, b]: exact 1D flux coefficient of the cell.
double harmonic_eps(double a, double b) {
  double inv = 0.0;
  if (a < kJump) inv += (std::min(b, kJump) - a) / kEpsLeft;
  if (b > kJump) inv += (b - std::max(a, kJump)) / kEpsRight;
  return (b - a) / inv;
}

}  // namespace

HeatProblem::HeatProblem(int n, int refine)
    : n_(n), refine_(refine), cells_(n * refine), h_(2.0 / (n * refine)) {
  if (n < 1 || refine < 1) throw Error("heat problem needs n >= 1 and refine >= 1");
  for (int64_t v = -2; v <= 23; ++v) xi_.push_back(v);
  gamma_.assign(n_, 1);

  const int interior = cells_ - 1;
  if (interior < 1) throw Error("heat problem needs at least two fine cells");
  std::vector<double> eps(cells_);
  for (int c = 0; c < cells_; ++c) {
    eps[c] = harmonic_eps(kLeft + c * h_, kLeft + (c + 1) * h_);
  }
  diag_.resize(interior);
  off_.assign(interior, 0.0);
  source_load_.resize(interior);
  for (int k = 0; k < interior; ++k) {
    // Interior node k sits between cells k and k + 1.
    diag_[k] = (eps[k] + eps[k + 1]) / h_;
    if (k + 1 < interior) off_[k] = -eps[k + 1] / h_;
    source_load_[k] = h_ * source(kLeft + (k + 1) * h_);
  }
  pivot_.resize(interior);
  pivot_[0] = diag_[0];
  for (int k = 1; k < interior; ++k) {
    pivot_[k] = diag_[k] - off_[k - 1] * off_[k - 1] / pivot_[k - 1];
  }
}

std::vector<double> HeatProblem::solve(std::vector<double> rhs) const {
  const int size = static_cast<int>(rhs.size());
  for (int k = 1; k < size; ++k) rhs[k] -= off_[k - 1] / pivot_[k - 1] * rhs[k - 1];
  rhs[size - 1] /= pivot_[size - 1];
  for (int k = size - 2; k >= 0; --k) rhs[k] = (rhs[k] - off_[k] * rhs[k + 1]) / pivot_[k];
  return rhs;
}

std::vector<double> HeatProblem::state(std::span<const double> x) const {
  if (x.size() != static_cast<size_t>(n_)) throw Error("control has the wrong length");
  std::vector<double> rhs = source_load_;
  for (int k = 0; k < cells_ - 1; ++k) {
    const double left = x[k / refine_];
    const double right = x[(k + 1) / refine_];
    rhs[k] += 0.5 * h_ * (left + right);
  }
  return solve(std::move(rhs));
}

double HeatProblem::smooth_value(std::span<const double> x) const {
  const auto u = state(x);
  // Boundary nodes hold u = 0 and carry half weight each.
  double sum = h_;
  for (double v : u) sum += h_ * (v - 1.0) * (v - 1.0);
  return 0.5 * sum;
}

std::vector<double> HeatProblem::gradient_coeffs(std::span<const double> x) const {
  auto adjoint = state(x);
  for (double& v : adjoint) v = h_ * (v - 1.0);
  adjoint = solve(std::move(adjoint));
  std::vector<double> grad(n_, 0.0);
  for (int c = 0; c < cells_; ++c) {
    // Cell c spans nodes c and c + 1; interior node k is node k + 1.
    const double p_left = c >= 1 ? adjoint[c - 1] : 0.0;
    const double p_right = c + 1 <= cells_ - 1 ? adjoint[c] : 0.0;
    grad[c / refine_] += 0.5 * h_ * (p_left + p_right);
  }
  return grad;
}

std::unique_ptr<ControlProblem> make_heat_problem(int n, int refine) {
  return std::make_unique<HeatProblem>(n, refine);
}

}  // namespace trip
