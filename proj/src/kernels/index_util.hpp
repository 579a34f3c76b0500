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

#pragma once

#include <cstddef>
#include <cstdint>

namespace ppath::kernels::detail {

// Insert a zero digit of the given radix at place value `stride`.
constexpr std::size_t insert_zero(std::size_t c, std::size_t stride, std::size_t radix) {
  return (c / stride) * (stride * radix) + c % stride;
}

struct PairStrides {
  std::size_t a;   // place value of qa
  std::size_t b;   // place value of qb
  std::size_t lo;  // min(a, b)
  std::size_t hi;  // max(a, b)
};

constexpr std::size_t place_value(int n, int q, std::size_t radix) {
  std::size_t v = 1;
  for (int i = 0; i < n - 1 - q; ++i) v *= radix;
  return v;
}

constexpr PairStrides pair_strides(int n, int qa, int qb, std::size_t radix) {
  const std::size_t a = place_value(n, qa, radix);
  const std::size_t b = place_value(n, qb, radix);
  return {a, b, a < b ? a : b, a < b ? b : a};
}

// c-th index whose digits at both pair positions are zero.
constexpr std::size_t pair_base(std::size_t c, const PairStrides& s, std::size_t radix) {
  return insert_zero(insert_zero(c, s.lo, radix), s.hi, radix);
}

}  // namespace ppath::kernels::detail
