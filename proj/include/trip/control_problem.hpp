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

#ifndef TRIP_CONTROL_PROBLEM_HPP_
#define TRIP_CONTROL_PROBLEM_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace trip {

// A discretized smooth objective F over interval-wise constant controls.
// Implementations must be safe for concurrent const use.
class ControlProblem {
 public:
  virtual ~ControlProblem() = default;

  virtual int n() const = 0;
  virtual const std::vector<int64_t>& xi() const = 0;
  virtual const std::vector<int64_t>& gamma() const = 0;

  // F on the continuous relaxation (one real value per interval).
  virtual double smooth_value(std::span<const double> x) const = 0;
  // dF/dx_i, i.e. the L2 gradient integrated over interval i.
  virtual std::vector<double> gradient_coeffs(std::span<const double> x) const = 0;

  double value_at(std::span<const int64_t> x) const;
  std::vector<double> gradient_at(std::span<const int64_t> x) const;
};

std::vector<double> to_real(std::span<const int64_t> x);

}  // namespace trip

#endif  // TRIP_CONTROL_PROBLEM_HPP_
