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

#include <algorithm>
#include <limits>

#include "trip/simd/kernels.hpp"

namespace trip::simd::detail {
namespace {

void shifted_min_scalar(double* dst, uint16_t* pred, const double* src,
                        size_t len, double w, uint16_t tag) {
  for (size_t e = 0; e < len; ++e) {
    const double cand = src[e] + w;
    if (cand < dst[e]) {
      dst[e] = cand;
      pred[e] = tag;
    }
  }
}

double max_affine_scalar(const double* intercepts, const double* slopes,
                         size_t len, double x) {
  double best = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < len; ++i) {
    best = std::max(best, intercepts[i] - slopes[i] * x);
  }
  return best;
}

// Mirrors the AVX2 kernel: two 4-wide accumulators, folded pairwise.
double dot_scalar(const double* a, const double* b, size_t len) {
  double acc[8] = {0, 0, 0, 0, 0, 0, 0, 0};
  size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    for (int l = 0; l < 8; ++l) acc[l] += a[i + l] * b[i + l];
  }
  double t[4];
  for (int l = 0; l < 4; ++l) t[l] = acc[l] + acc[l + 4];
  double total = (t[0] + t[2]) + (t[1] + t[3]);
  for (; i < len; ++i) total += a[i] * b[i];
  return total;
}

}  // namespace

const KernelTable kScalarTable = {Isa::kScalar, shifted_min_scalar,
                                  max_affine_scalar, dot_scalar};

}  // namespace trip::simd::detail
