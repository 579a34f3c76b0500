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

#include <immintrin.h>

#include <array>

#include "kernels/index_util.hpp"
#include "kernels/scalar.hpp"

namespace ppath::kernels::avx2 {

using detail::pair_base;
using detail::pair_strides;

// Four consecutive blocks share one offset pattern once the lower gate digit
// has place value >= 4, so each lane of a ymm register handles one block.
void apply_transfer(double* coeffs, int n, int qa, int qb, const double* table) {
  const auto s = pair_strides(n, qa, qb, 4);
  if (s.lo < 4) {
    scalar::apply_transfer(coeffs, n, qa, qb, table);
    return;
  }
  std::array<std::size_t, 16> off{};
  for (std::size_t p = 0; p < 16; ++p) off[p] = (p / 4) * s.a + (p % 4) * s.b;
  const std::size_t blocks = detail::place_value(n, -1, 4) / 16;
  __m256d in[16];
  for (std::size_t c = 0; c < blocks; c += 4) {
    double* base = coeffs + pair_base(c, s, 4);
    for (std::size_t p = 0; p < 16; ++p) in[p] = _mm256_loadu_pd(base + off[p]);
    for (std::size_t q = 0; q < 16; ++q) {
      const double* row = table + q * 16;
      __m256d acc0 = _mm256_mul_pd(_mm256_broadcast_sd(row + 0), in[0]);
      __m256d acc1 = _mm256_mul_pd(_mm256_broadcast_sd(row + 1), in[1]);
      for (std::size_t p = 2; p < 16; p += 2) {
        acc0 = _mm256_fmadd_pd(_mm256_broadcast_sd(row + p), in[p], acc0);
        acc1 = _mm256_fmadd_pd(_mm256_broadcast_sd(row + p + 1), in[p + 1], acc1);
      }
      _mm256_storeu_pd(base + off[q], _mm256_add_pd(acc0, acc1));
    }
  }
}

// One ymm holds two complex amplitudes of adjacent blocks.
void apply_gate(std::complex<double>* amps, int n, int qa, int qb, const std::complex<double>* u) {
  const auto s = pair_strides(n, qa, qb, 2);
  if (s.lo < 2) {
    scalar::apply_gate(amps, n, qa, qb, u);
    return;
  }
  const std::array<std::size_t, 4> off{0, s.b, s.a, s.a + s.b};
  __m256d ure[16];
  __m256d uim[16];
  for (std::size_t i = 0; i < 16; ++i) {
    ure[i] = _mm256_set1_pd(u[i].real());
    uim[i] = _mm256_set1_pd(u[i].imag());
  }
  const std::size_t blocks = detail::place_value(n, -1, 2) / 4;
  auto* raw = reinterpret_cast<double*>(amps);
  __m256d in[4];
  __m256d swapped[4];
  for (std::size_t c = 0; c < blocks; c += 2) {
    double* base = raw + 2 * pair_base(c, s, 2);
    for (std::size_t k = 0; k < 4; ++k) {
      in[k] = _mm256_loadu_pd(base + 2 * off[k]);
      swapped[k] = _mm256_permute_pd(in[k], 0b0101);
    }
    for (std::size_t r = 0; r < 4; ++r) {
      __m256d acc = _mm256_setzero_pd();
      for (std::size_t k = 0; k < 4; ++k) {
        // (ur + i ui)(vr + i vi): even lanes ur vr - ui vi, odd lanes ur vi + ui vr
        const __m256d t = _mm256_mul_pd(uim[r * 4 + k], swapped[k]);
        acc = _mm256_add_pd(acc, _mm256_fmaddsub_pd(ure[r * 4 + k], in[k], t));
      }
      _mm256_storeu_pd(base + 2 * off[r], acc);
    }
  }
}

void depolarize(double* coeffs, int n, double keep) {
  const std::size_t len = detail::place_value(n, -1, 4);
  const __m256d k = _mm256_set1_pd(keep);
  for (int q = 0; q < n; ++q) {
    const std::size_t stride = detail::place_value(n, q, 4);
    for (std::size_t block = 0; block < len; block += 4 * stride) {
      std::size_t i = block + stride;
      const std::size_t end = block + 4 * stride;
      if (stride >= 4) {
        for (; i < end; i += 4) _mm256_storeu_pd(coeffs + i, _mm256_mul_pd(_mm256_loadu_pd(coeffs + i), k));
      }
      for (; i < end; ++i) coeffs[i] *= keep;
    }
  }
}

void walsh_hadamard(double* data, std::size_t len) {
  std::size_t h = 1;
  for (; h < len && h < 4; h *= 2) {
    for (std::size_t i = 0; i < len; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const double x = data[j];
        const double y = data[j + h];
        data[j] = x + y;
        data[j + h] = x - y;
      }
    }
  }
  for (; h < len; h *= 2) {
    for (std::size_t i = 0; i < len; i += 2 * h) {
      for (std::size_t j = i; j < i + h; j += 4) {
        const __m256d x = _mm256_loadu_pd(data + j);
        const __m256d y = _mm256_loadu_pd(data + j + h);
        _mm256_storeu_pd(data + j, _mm256_add_pd(x, y));
        _mm256_storeu_pd(data + j + h, _mm256_sub_pd(x, y));
      }
    }
  }
}

}  // namespace ppath::kernels::avx2
