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

#include <immintrin.h>

#include <bit>
#include <limits>

#include "trip/simd/kernels.hpp"

namespace trip::simd::detail {
namespace {

void shifted_min_avx2(double* dst, uint16_t* pred, const double* src,
                      size_t len, double w, uint16_t tag) {
  const __m256d wv = _mm256_set1_pd(w);
  size_t e = 0;
  for (; e + 4 <= len; e += 4) {
    const __m256d cur = _mm256_loadu_pd(dst + e);
    const __m256d cand = _mm256_add_pd(_mm256_loadu_pd(src + e), wv);
    const __m256d less = _mm256_cmp_pd(cand, cur, _CMP_LT_OQ);
    unsigned bits = static_cast<unsigned>(_mm256_movemask_pd(less));
    if (bits == 0) continue;
    _mm256_storeu_pd(dst + e, _mm256_blendv_pd(cur, cand, less));
    while (bits != 0) {
      pred[e + std::countr_zero(bits)] = tag;
      bits &= bits - 1;
    }
  }
  for (; e < len; ++e) {
    const double cand = src[e] + w;
    if (cand < dst[e]) {
      dst[e] = cand;
      pred[e] = tag;
    }
  }
}

double max_affine_avx2(const double* intercepts, const double* slopes,
                       size_t len, double x) {
  const double neg_inf = -std::numeric_limits<double>::infinity();
  const __m256d xv = _mm256_set1_pd(x);
  __m256d best = _mm256_set1_pd(neg_inf);
  size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m256d v = _mm256_sub_pd(_mm256_loadu_pd(intercepts + i),
                                    _mm256_mul_pd(_mm256_loadu_pd(slopes + i), xv));
    best = _mm256_max_pd(best, v);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double out = neg_inf;
  for (double lane : lanes) out = lane > out ? lane : out;
  for (; i < len; ++i) {
    const double v = intercepts[i] - slopes[i] * x;
    out = v > out ? v : out;
  }
  return out;
}

double dot_avx2(const double* a, const double* b, size_t len) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(a + i),
                                             _mm256_loadu_pd(b + i)));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(_mm256_loadu_pd(a + i + 4),
                                             _mm256_loadu_pd(b + i + 4)));
  }
  const __m256d t = _mm256_add_pd(acc0, acc1);
  const __m128d pair = _mm_add_pd(_mm256_castpd256_pd128(t),
                                  _mm256_extractf128_pd(t, 1));
  double total = _mm_cvtsd_f64(pair) + _mm_cvtsd_f64(_mm_unpackhi_pd(pair, pair));
  for (; i < len; ++i) total += a[i] * b[i];
  return total;
}

}  // namespace

const KernelTable kAvx2Table = {Isa::kAvx2, shifted_min_avx2, max_affine_avx2,
                                dot_avx2};

}  // namespace trip::simd::detail
