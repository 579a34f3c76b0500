// Copyright 2026 The ppath Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <string_view>

#include "kernels/scalar.hpp"
#include "ppath/kernels.hpp"

namespace ppath::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(PPATH_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__)) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

bool forced_scalar() {
  const char* env = std::getenv("PPATH_SIMD");
  return env != nullptr && std::string_view(env) == "scalar";
}

}  // namespace

const KernelSet& scalar_kernels() {
  static const KernelSet set{Isa::Scalar, "scalar", &scalar::apply_transfer, &scalar::apply_gate, &scalar::depolarize,
                             &scalar::walsh_hadamard};
  return set;
}

const KernelSet* avx2_kernels() {
#ifdef PPATH_HAVE_AVX2
  static const KernelSet set{Isa::Avx2, "avx2", &avx2::apply_transfer, &avx2::apply_gate, &avx2::depolarize,
                             &avx2::walsh_hadamard};
  static const bool supported = cpu_has_avx2();
  return supported ? &set : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet& active_kernels() {
  static const KernelSet& chosen = [] () -> const KernelSet& {
    const KernelSet* fast = avx2_kernels();
    if (fast != nullptr && !forced_scalar()) return *fast;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace ppath::kernels
