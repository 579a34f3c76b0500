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

#include <cmath>
#include <vector>

#include "ppath/circuit.hpp"
#include "ppath/linalg.hpp"

namespace ppath::testing {

inline Mat4 cnot() {
  Mat4 u{};
  u[0] = 1.0;
  u[5] = 1.0;
  u[11] = 1.0;
  u[14] = 1.0;
  return u;
}

/// |00> -> (|00> + |11>)/sqrt2: CNOT after H on the first qubit.
inline Mat4 bell_gate() {
  const double r = 1.0 / std::sqrt(2.0);
  const Mat2 h{cplx(r), cplx(r), cplx(r), cplx(-r)};
  return linalg::mul(cnot(), linalg::kron(h, linalg::identity2()));
}

inline Circuit explicit_circuit(const Architecture& arch, const Mat4& every_gate) {
  GateSetSpec spec;
  spec.kind = GateKind::Explicit;
  spec.matrices.assign(static_cast<std::size_t>(arch.depth()),
                       std::vector<Mat4>(static_cast<std::size_t>(arch.gates_per_layer()), every_gate));
  return build_circuit(arch, spec);
}

inline Circuit identity_circuit(int n, int d) {
  return explicit_circuit(Architecture::brickwork(n, d), linalg::identity4());
}

inline Circuit haar_circuit(int n, int d, std::uint64_t seed) {
  GateSetSpec spec;
  spec.seed = seed;
  return build_circuit(Architecture::brickwork(n, d), spec);
}

}  // namespace ppath::testing
