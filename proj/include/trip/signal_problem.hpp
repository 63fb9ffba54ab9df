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

#ifndef TRIP_SIGNAL_PROBLEM_HPP_
#define TRIP_SIGNAL_PROBLEM_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "trip/control_problem.hpp"

namespace trip {

// Signal reconstruction on [0, 1]: F(x) = 1/2 ||K x - f||^2 with the causal
// convolution (K x)(t) = int_0^t k(t - s) x(s) ds, f(t) = 5 sin(4 pi t) + 10
// and xi = {-5, ..., 5}. The kernel is a sum of 200 Gaussians with weights
// ~ U[0,1), centers ~ U[-2,3) and widths ~ Exp(1), drawn from seed.
//
// Controls are broadcast to fine_cells uniform cells; K x is evaluated at the
// 5 Gauss-Legendre points of each fine cell using closed-form cell integrals
// of the kernel, which makes K one Toeplitz operator per quadrature point.
class SignalProblem final : public ControlProblem {
 public:
  static constexpr int kGaussians = 200;
  static constexpr int kQuadPoints = 5;

  SignalProblem(int n, uint64_t seed, int fine_cells = 4096);

  int n() const override { return n_; }
  const std::vector<int64_t>& xi() const override { return xi_; }
  const std::vector<int64_t>& gamma() const override { return gamma_; }
  double smooth_value(std::span<const double> x) const override;
  std::vector<double> gradient_coeffs(std::span<const double> x) const override;

  int fine_cells() const { return cells_; }
  // k(t) for t >= 0 and its integral from 0 to t.
  double kernel(double t) const;
  double kernel_integral(double t) const;

 private:
  std::vector<double> broadcast(std::span<const double> x) const;
  // Residual K x - f at every (cell, quadrature point), cell-major.
  std::vector<double> residual(const std::vector<double>& fine) const;

  int n_;
  int cells_;
  double h_;
  std::vector<int64_t> xi_;
  std::vector<int64_t> gamma_;
  std::array<double, kGaussians> weight_{};
  std::array<double, kGaussians> center_{};
  std::array<double, kGaussians> width_{};
  // weights_[q][j]: contribution of the cell j steps back; reversed_[q] is
  // the same vector back to front so K x becomes a dot with a prefix of x.
  std::array<std::vector<double>, kQuadPoints> weights_;
  std::array<std::vector<double>, kQuadPoints> reversed_;
  std::vector<double> target_;  // f at the quadrature points
};

std::unique_ptr<ControlProblem> make_signal_problem(int n, uint64_t seed,
                                                    int fine_cells = 4096);

}  // namespace trip

#endif  // TRIP_SIGNAL_PROBLEM_HPP_
