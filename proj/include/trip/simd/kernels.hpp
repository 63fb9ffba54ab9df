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

#ifndef TRIP_SIMD_KERNELS_HPP_
#define TRIP_SIMD_KERNELS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>

// Data-parallel inner loops shared by the solvers. Each kernel has a scalar
// reference and, on x86-64, an AVX2 variant picked at runtime. Variants
// produce bit-identical results (the build disables FMA contraction and the
// scalar dot product uses the same 8-lane blocked summation order as AVX2).
namespace trip::simd {

enum class Isa { kScalar, kAvx2 };

struct KernelTable {
  Isa isa;
  // dst[e] = min(dst[e], src[e] + w) for e < len; pred[e] = tag wherever the
  // candidate is strictly smaller.
  void (*shifted_min)(double* dst, uint16_t* pred, const double* src,
                      size_t len, double w, uint16_t tag);
  // max_i (intercepts[i] - slopes[i] * x); -inf for len == 0.
  double (*max_affine)(const double* intercepts, const double* slopes,
                       size_t len, double x);
  double (*dot)(const double* a, const double* b, size_t len);
};

bool isa_supported(Isa isa);
const char* isa_name(Isa isa);

// Table for one instruction set. Throws trip::Error when unsupported.
const KernelTable& kernels(Isa isa);

// The active table: best supported ISA, unless overridden by the TRIP_SIMD
// environment variable ("scalar" or "avx2") or set_active_isa().
const KernelTable& kernels();
void set_active_isa(Isa isa);
Isa active_isa();

inline void shifted_min(std::span<double> dst, std::span<uint16_t> pred,
                        std::span<const double> src, double w, uint16_t tag) {
  kernels().shifted_min(dst.data(), pred.data(), src.data(), dst.size(), w, tag);
}

inline double max_affine(std::span<const double> intercepts,
                         std::span<const double> slopes, double x) {
  return kernels().max_affine(intercepts.data(), slopes.data(),
                              intercepts.size(), x);
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  return kernels().dot(a.data(), b.data(), a.size());
}

namespace detail {
extern const KernelTable kScalarTable;
#ifdef TRIP_HAVE_AVX2
extern const KernelTable kAvx2Table;
#endif
}  // namespace detail

}  // namespace trip::simd

#endif  // TRIP_SIMD_KERNELS_HPP_
