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
#include <span>

namespace ppath::kernels {

// Dense inner loops of the exact oracles. Each kernel has a scalar reference
// implementation and, on x86-64, an AVX2+FMA variant selected at runtime.
// Variants agree to rounding; tests/test_kernels.cpp checks the equivalence.
//
// Layouts:
//   Pauli coefficient vectors have 4^n entries. Index = sum_q P_q 4^(n-1-q)
//   with P in I=0, X=1, Y=2, Z=3, so qubit 0 is the most significant digit.
//   Statevectors have 2^n amplitudes, qubit 0 the most significant bit.

enum class Isa { Scalar, Avx2 };

struct KernelSet {
  Isa isa;
  const char* name;
  /// coeffs <- (M on qubits (qa, qb)) coeffs; table is the 16x16 row-major
  /// transfer matrix with qa the more significant Pauli digit.
  void (*apply_transfer)(double* coeffs, int n, int qa, int qb, const double* table);
  /// amps <- (U on qubits (qa, qb)) amps; u is row-major 4x4 with qa more significant.
  void (*apply_gate)(std::complex<double>* amps, int n, int qa, int qb, const std::complex<double>* u);
  /// Multiply every coefficient by keep^(number of non-identity digits).
  void (*depolarize)(double* coeffs, int n, double keep);
  /// Unnormalized in-place Walsh-Hadamard transform; len is a power of two.
  void (*walsh_hadamard)(double* data, std::size_t len);
};

const KernelSet& scalar_kernels();
/// nullptr unless compiled in and supported by this CPU.
const KernelSet* avx2_kernels();
/// AVX2 when available, unless the environment sets PPATH_SIMD=scalar.
const KernelSet& active_kernels();

}  // namespace ppath::kernels
