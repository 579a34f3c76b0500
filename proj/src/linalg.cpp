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

#include "ppath/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace ppath::linalg {

namespace {

template <std::size_t D>
std::array<cplx, D * D> mul_impl(const std::array<cplx, D * D>& a, const std::array<cplx, D * D>& b) {
  std::array<cplx, D * D> out{};
  for (std::size_t i = 0; i < D; ++i) {
    for (std::size_t k = 0; k < D; ++k) {
      const cplx aik = a[i * D + k];
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < D; ++j) out[i * D + j] += aik * b[k * D + j];
    }
  }
  return out;
}

template <std::size_t D>
std::array<cplx, D * D> adjoint_impl(const std::array<cplx, D * D>& a) {
  std::array<cplx, D * D> out{};
  for (std::size_t i = 0; i < D; ++i) {
    for (std::size_t j = 0; j < D; ++j) out[j * D + i] = std::conj(a[i * D + j]);
  }
  return out;
}

template <std::size_t D>
double unitarity_impl(const std::array<cplx, D * D>& u) {
  const auto g = mul_impl<D>(adjoint_impl<D>(u), u);
  double worst = 0.0;
  for (std::size_t i = 0; i < D; ++i) {
    for (std::size_t j = 0; j < D; ++j) {
      const cplx expect = (i == j) ? cplx{1.0, 0.0} : cplx{};
      worst = std::max(worst, std::abs(g[i * D + j] - expect));
    }
  }
  return worst;
}

}  // namespace

Mat2 identity2() { return {cplx{1}, cplx{}, cplx{}, cplx{1}}; }

Mat4 identity4() {
  Mat4 m{};
  for (std::size_t i = 0; i < 4; ++i) m[i * 5] = 1.0;
  return m;
}

Mat2 mul(const Mat2& a, const Mat2& b) { return mul_impl<2>(a, b); }
Mat4 mul(const Mat4& a, const Mat4& b) { return mul_impl<4>(a, b); }
Mat2 adjoint(const Mat2& a) { return adjoint_impl<2>(a); }
Mat4 adjoint(const Mat4& a) { return adjoint_impl<4>(a); }

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out{};
  for (std::size_t ar = 0; ar < 2; ++ar) {
    for (std::size_t ac = 0; ac < 2; ++ac) {
      for (std::size_t br = 0; br < 2; ++br) {
        for (std::size_t bc = 0; bc < 2; ++bc) {
          out[(ar * 2 + br) * 4 + (ac * 2 + bc)] = a[ar * 2 + ac] * b[br * 2 + bc];
        }
      }
    }
  }
  return out;
}

double unitarity_deviation(const Mat4& u) { return unitarity_impl<4>(u); }
double unitarity_deviation(const Mat2& u) { return unitarity_impl<2>(u); }

double max_abs_diff(const Mat4& a, const Mat4& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 16; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

Mat2 rz(double theta) {
  return {std::polar(1.0, -theta / 2), cplx{}, cplx{}, std::polar(1.0, theta / 2)};
}

}  // namespace ppath::linalg
