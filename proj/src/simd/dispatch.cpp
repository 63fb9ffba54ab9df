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

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "trip/instance.hpp"
#include "trip/simd/kernels.hpp"

namespace trip::simd {
namespace {

Isa best_supported() {
#ifdef TRIP_HAVE_AVX2
  if (isa_supported(Isa::kAvx2)) return Isa::kAvx2;
#endif
  return Isa::kScalar;
}

Isa initial_isa() {
  if (const char* env = std::getenv("TRIP_SIMD")) {
    const std::string_view want(env);
    if (want == "scalar") return Isa::kScalar;
    if (want == "avx2" && isa_supported(Isa::kAvx2)) return Isa::kAvx2;
  }
  return best_supported();
}

std::atomic<const KernelTable*>& active_table() {
  static std::atomic<const KernelTable*> table{&kernels(initial_isa())};
  return table;
}

}  // namespace

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#ifdef TRIP_HAVE_AVX2
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

const char* isa_name(Isa isa) {
  return isa == Isa::kAvx2 ? "avx2" : "scalar";
}

const KernelTable& kernels(Isa isa) {
  if (!isa_supported(isa)) {
    throw Error(std::string("instruction set not supported: ") + isa_name(isa));
  }
#ifdef TRIP_HAVE_AVX2
  if (isa == Isa::kAvx2) return detail::kAvx2Table;
#endif
  return detail::kScalarTable;
}

const KernelTable& kernels() { return *active_table().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  active_table().store(&kernels(isa), std::memory_order_relaxed);
}

Isa active_isa() { return kernels().isa; }

}  // namespace trip::simd
