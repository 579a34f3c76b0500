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

#include "kernels/scalar.hpp"

#include <array>

#include "kernels/index_util.hpp"

namespace ppath::kernels::scalar {

using detail::pair_base;
using detail::pair_strides;

void apply_transfer(double* coeffs, int n, int qa, int qb, const double* table) {
  const auto s = pair_strides(n, qa, qb, 4);
  std::array<std::size_t, 16> off{};
  for (std::size_t p = 0; p < 16; ++p) off[p] = (p / 4) * s.a + (p % 4) * s.b;
  const std::size_t blocks = detail::place_value(n, -1, 4) / 16;
  std::array<double, 16> in{};
  for (std::size_t c = 0; c < blocks; ++c) {
    double* base = coeffs + pair_base(c, s, 4);
    for (std::size_t p = 0; p < 16; ++p) in[p] = base[off[p]];
    for (std::size_t q = 0; q < 16; ++q) {
      double acc = 0.0;
      for (std::size_t p = 0; p < 16; ++p) acc += table[q * 16 + p] * in[p];
      base[off[q]] = acc;
    }
  }
}

void apply_gate(std::complex<double>* amps, int n, int qa, int qb, const std::complex<double>* u) {
  const auto s = pair_strides(n, qa, qb, 2);
  const std::array<std::size_t, 4> off{0, s.b, s.a, s.a + s.b};
  const std::size_t blocks = detail::place_value(n, -1, 2) / 4;
  std::array<std::complex<double>, 4> in{};
  for (std::size_t c = 0; c < blocks; ++c) {
    std::complex<double>* base = amps + pair_base(c, s, 2);
    for (std::size_t k = 0; k < 4; ++k) in[k] = base[off[k]];
    for (std::size_t r = 0; r < 4; ++r) {
      std::complex<double> acc{};
      for (std::size_t k = 0; k < 4; ++k) acc += u[r * 4 + k] * in[k];
      base[off[r]] = acc;
    }
  }
}

void depolarize(double* coeffs, int n, double keep) {
  const std::size_t len = detail::place_value(n, -1, 4);
  for (int q = 0; q < n; ++q) {
    const std::size_t stride = detail::place_value(n, q, 4);
    for (std::size_t block = 0; block < len; block += 4 * stride) {
      for (std::size_t i = block + stride; i < block + 4 * stride; ++i) coeffs[i] *= keep;
    }
  }
}

void walsh_hadamard(double* data, std::size_t len) {
  for (std::size_t h = 1; h < len; h *= 2) {
    for (std::size_t i = 0; i < len; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const double x = data[j];
        const double y = data[j + h];
        data[j] = x + y;
        data[j + h] = x - y;
      }
    }
  }
}

}  // namespace ppath::kernels::scalar
