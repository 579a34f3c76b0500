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

#include <complex>
#include <cstddef>

namespace ppath::kernels::scalar {

void apply_transfer(double* coeffs, int n, int qa, int qb, const double* table);
void apply_gate(std::complex<double>* amps, int n, int qa, int qb, const std::complex<double>* u);
void depolarize(double* coeffs, int n, double keep);
void walsh_hadamard(double* data, std::size_t len);

}  // namespace ppath::kernels::scalar

namespace ppath::kernels::avx2 {

// Defined in avx2.cpp, which is compiled with -mavx2 -mfma.
void apply_transfer(double* coeffs, int n, int qa, int qb, const double* table);
void apply_gate(std::complex<double>* amps, int n, int qa, int qb, const std::complex<double>* u);
void depolarize(double* coeffs, int n, double keep);
void walsh_hadamard(double* data, std::size_t len);

}  // namespace ppath::kernels::avx2
