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

#include <array>
#include <complex>

namespace ppath {

using cplx = std::complex<double>;

/// Row-major 2x2 complex matrix.
using Mat2 = std::array<cplx, 4>;

/// Row-major 4x4 complex matrix over |00>,|01>,|10>,|11>, first qubit more significant.
using Mat4 = std::array<cplx, 16>;

namespace linalg {

Mat2 identity2();
Mat4 identity4();

Mat2 mul(const Mat2& a, const Mat2& b);
Mat4 mul(const Mat4& a, const Mat4& b);

Mat2 adjoint(const Mat2& a);
Mat4 adjoint(const Mat4& a);

/// a (x) b with a acting on the more significant qubit.
Mat4 kron(const Mat2& a, const Mat2& b);

/// max_ij |(U^dag U - I)_ij|
double unitarity_deviation(const Mat4& u);
double unitarity_deviation(const Mat2& u);

double max_abs_diff(const Mat4& a, const Mat4& b);

/// Single-qubit Z rotation exp(-i theta Z / 2).
Mat2 rz(double theta);

}  // namespace linalg
}  // namespace ppath
