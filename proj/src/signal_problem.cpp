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

#include "trip/signal_problem.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "trip/instance.hpp"
#include "trip/simd/kernels.hpp"

namespace trip {
namespace {

// Five-point Gauss-Legendre rule on [-1, 1].
constexpr std::array<double, 5> kGaussNodes = {
    -0.9061798459386639927976269, -0.5384693101056830910363144, 0.0,
    0.5384693101056830910363144, 0.9061798459386639927976269};
constexpr std::array<double, 5> kGaussWeights = {
    0.2369268850561890875142640, 0.4786286704993664680412915,
    0.5688888888888888888888889, 0.4786286704993664680412915,
    0.2369268850561890875142640};

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

}  // namespace

SignalProblem::SignalProblem(int n, uint64_t seed, int fine_cells)
    : n_(n), cells_(fine_cells), h_(1.0 / fine_cells) {
  if (n < 1 || fine_cells < n || fine_cells % n != 0) {
    throw Error("signal problem needs n to divide the fine grid size");
  }
  for (int64_t v = -5; v <= 5; ++v) xi_.push_back(v);
  gamma_.assign(n_, 1);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> centers(-2.0, 3.0);
  std::exponential_distribution<double> widths(1.0);
  for (int i = 0; i < kGaussians; ++i) {
    weight_[i] = unit(rng);
    center_[i] = centers(rng);
    width_[i] = widths(rng);
  }

  for (int q = 0; q < kQuadPoints; ++q) {
    const double theta = 0.5 * (1.0 + kGaussNodes[q]);
    // G((j + theta) h) for j = 0 .. cells - 1.
    std::vector<double> cumulative(cells_);
    for (int j = 0; j < cells_; ++j) cumulative[j] = kernel_integral((j + theta) * h_);
    auto& w = weights_[q];
    w.resize(cells_);
    w[0] = cumulative[0];
    for (int j = 1; j < cells_; ++j) w[j] = cumulative[j] - cumulative[j - 1];
    reversed_[q].assign(w.rbegin(), w.rend());
  }

  target_.resize(static_cast<size_t>(cells_) * kQuadPoints);
  for (int m = 0; m < cells_; ++m) {
    for (int q = 0; q < kQuadPoints; ++q) {
      const double t = (m + 0.5 * (1.0 + kGaussNodes[q])) * h_;
      target_[m * kQuadPoints + q] = 5.0 * std::sin(4.0 * std::numbers::pi * t) + 10.0;
    }
  }
}

double SignalProblem::kernel(double t) const {
  if (t < 0.0) return 0.0;
  double sum = 0.0;
  for (int i = 0; i < kGaussians; ++i) {
    const double z = (t - center_[i]) / width_[i];
    sum += weight_[i] * std::exp(-0.5 * z * z) / (std::sqrt(2.0 * std::numbers::pi) * width_[i]);
  }
  return sum;
}

double SignalProblem::kernel_integral(double t) const {
  if (t <= 0.0) return 0.0;
  double sum = 0.0;
  for (int i = 0; i < kGaussians; ++i) {
    sum += weight_[i] * (normal_cdf((t - center_[i]) / width_[i]) -
                         normal_cdf(-center_[i] / width_[i]));
  }
  return sum;
}

std::vector<double> SignalProblem::broadcast(std::span<const double> x) const {
  if (x.size() != static_cast<size_t>(n_)) throw Error("control has the wrong length");
  const int per = cells_ / n_;
  std::vector<double> fine(cells_);
  for (int m = 0; m < cells_; ++m) fine[m] = x[m / per];
  return fine;
}

std::vector<double> SignalProblem::residual(const std::vector<double>& fine) const {
  const auto& kern = simd::kernels();
  std::vector<double> r(static_cast<size_t>(cells_) * kQuadPoints);
  for (int m = 0; m < cells_; ++m) {
    for (int q = 0; q < kQuadPoints; ++q) {
      // sum_{l <= m} w_q[m - l] x_l
      const double* w = reversed_[q].data() + (cells_ - 1 - m);
      r[m * kQuadPoints + q] = kern.dot(w, fine.data(), m + 1) - target_[m * kQuadPoints + q];
    }
  }
  return r;
}

double SignalProblem::smooth_value(std::span<const double> x) const {
  const auto r = residual(broadcast(x));
  double sum = 0.0;
  for (int m = 0; m < cells_; ++m) {
    for (int q = 0; q < kQuadPoints; ++q) {
      const double v = r[m * kQuadPoints + q];
      sum += 0.5 * kGaussWeights[q] * h_ * v * v;
    }
  }
  return 0.5 * sum;
}

std::vector<double> SignalProblem::gradient_coeffs(std::span<const double> x) const {
  const auto r = residual(broadcast(x));
  // Weighted residual per quadrature point, stored point-major for the dots.
  std::array<std::vector<double>, kQuadPoints> scaled;
  for (int q = 0; q < kQuadPoints; ++q) {
    scaled[q].resize(cells_);
    for (int m = 0; m < cells_; ++m) {
      scaled[q][m] = 0.5 * kGaussWeights[q] * h_ * r[m * kQuadPoints + q];
    }
  }
  const auto& kern = simd::kernels();
  const int per = cells_ / n_;
  std::vector<double> grad(n_, 0.0);
  for (int l = 0; l < cells_; ++l) {
    double g = 0.0;
    for (int q = 0; q < kQuadPoints; ++q) {
      // sum_{m >= l} s_q[m] w_q[m - l]
      g += kern.dot(weights_[q].data(), scaled[q].data() + l, cells_ - l);
    }
    grad[l / per] += g;
  }
  return grad;
}

std::unique_ptr<ControlProblem> make_signal_problem(int n, uint64_t seed, int fine_cells) {
  return std::make_unique<SignalProblem>(n, seed, fine_cells);
}

}  // namespace trip
