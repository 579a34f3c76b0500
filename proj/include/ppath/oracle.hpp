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
#include <span>
#include <vector>

#include "ppath/circuit.hpp"

namespace ppath {

/// Qubit caps of the dense oracles. Defaults keep memory under 1 GiB;
/// PPATH_MAX_STATEVECTOR_QUBITS and PPATH_MAX_PAULI_QUBITS override them.
struct OracleLimits {
  int max_statevector_qubits = 14;
  int max_pauli_qubits = 8;

  static OracleLimits from_env();
};

/// C|0^n>, qubit 0 the most significant bit of the index.
std::vector<std::complex<double>> statevector(const Circuit& c, const OracleLimits& limits = OracleLimits::from_env());

/// p(C, x) = |<x|C|0^n>|^2 for all x. Throws SizeCapError above the cap.
std::vector<double> ideal_distribution(const Circuit& c, const OracleLimits& limits = OracleLimits::from_env());

/// Final Pauli coefficients alpha_s = Tr(s rho) in the normalized basis after
/// alternating noise and gate layers; 4^n entries in kernel index order.
std::vector<double> pauli_coefficients(const Circuit& c, const NoiseModel& noise,
                                       const OracleLimits& limits = OracleLimits::from_env());

/// Exact noisy output distribution from pauli_coefficients. Entries down to
/// -1e-12 are clipped and the vector renormalized; anything more negative, or
/// a total off 1 by more than 1e-10, throws NumericalError.
std::vector<double> noisy_distribution(const Circuit& c, const NoiseModel& noise,
                                       const OracleLimits& limits = OracleLimits::from_env());

/// Truncated noisy sums for every truncation weight at once: entry l is the
/// dense q(x) restricted to paths of weight <= l, for l = 0 .. n(d+1).
///
/// Pauli propagation with one coefficient vector per accumulated path weight;
/// after each gate layer an entry on string s moves up by |s|. Paths are not
/// filtered for legality: illegal ones carry exact-zero transfer products up
/// to rounding.
std::vector<std::vector<double>> graded_truncated_distributions(const Circuit& c, const NoiseModel& noise,
                                                                const OracleLimits& limits = OracleLimits::from_env());

enum class PathSumMode { LegalOnly, AllPaths };

/// Full path sum of p(C, x). AllPaths walks all 4^{n(d+1)} paths (needs
/// n(d+1) <= 8). LegalOnly generates legal paths layer by layer, independently
/// of the path enumerator (needs n <= 6, d <= 4).
double brute_force_path_sum(const Circuit& c, const Bitstring& x, PathSumMode mode);

/// sum |p_i - q_i|
double l1_distance(std::span<const double> p, std::span<const double> q);
/// Half the L1 distance. Throws DimensionError on length mismatch.
double tvd(std::span<const double> p, std::span<const double> q);

}  // namespace ppath
