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

#ifndef TRIP_HEAT_PROBLEM_HPP_
#define TRIP_HEAT_PROBLEM_HPP_

#include <memory>
#include <vector>

#include "trip/control_problem.hpp"

namespace trip {

// Tracking of v = 1 by the state of a steady heat equation on (-1, 1):
//
//   -(eps u')' = f + x,  u(-1) = u(1) = 0,
//   eps = 0.1 left of t = 0.05 and 10 right of it,  f(t) = exp(-(t + 0.4)^2),
//   F(x) = 1/2 ||u - 1||^2,  xi = {-2, ..., 23}.
//
// Discretized with P1 elements on refine * n uniform cells (harmonic-mean
// conductivity per cell, trapezoid-lumped mass); the gradient is the exact
// adjoint of the discrete F.
class HeatProblem final : public ControlProblem {
 public:
  explicit HeatProblem(int n, int refine = 4);

  int n() const override { return n_; }
  const std::vector<int64_t>& xi() const override { return xi_; }
  const std::vector<int64_t>& gamma() const override { return gamma_; }
  double smooth_value(std::span<const double> x) const override;
  std::vector<double> gradient_coeffs(std::span<const double> x) const override;

  int fine_cells() const { return cells_; }
  // Nodal state for control x (interior nodes only).
  std::vector<double> state(std::span<const double> x) const;

 private:
  std::vector<double> solve(std::vector<double> rhs) const;

  int n_;
  int refine_;
  int cells_;
  double h_;
  std::vector<int64_t> xi_;
  std::vector<int64_t> gamma_;
  std::vector<double> source_load_;  // load of f at interior nodes
  // Cholesky-style factors of the symmetric tridiagonal stiffness matrix.
  std::vector<double> diag_;
  std::vector<double> off_;
  std::vector<double> pivot_;
};

std::unique_ptr<ControlProblem> make_heat_problem(int n, int refine = 4);

}  // namespace trip

#endif  // TRIP_HEAT_PROBLEM_HPP_
