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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "ppath/circuit.hpp"

using namespace ppath;

TEST_CASE("brickwork layout") {
  const auto arch = Architecture::brickwork(4, 2);
  REQUIRE(arch.valid());
  CHECK(arch.depth() == 2);
  CHECK(arch.layer(0) == std::vector<GatePair>{{0, 1}, {2, 3}});
  CHECK(arch.layer(1) == std::vector<GatePair>{{1, 2}, {3, 0}});
  CHECK(arch.pair_mask(1, 1) == (qubit_bit(4, 3) | qubit_bit(4, 0)));
  CHECK_THROWS_AS(Architecture::brickwork(3, 2), ValidationError);
  CHECK_THROWS_AS(Architecture::brickwork(4, 0), ValidationError);
}

TEST_CASE("broken matchings are reported") {
  const Architecture dup(4, {{{0, 1}, {1, 2}}});
  CHECK_FALSE(dup.valid());
  CHECK_THROWS_AS(dup.require_valid(), ValidationError);
  const auto c = Circuit::unvalidated(dup, {{linalg::identity4(), linalg::identity4()}});
  const auto v = validate_circuit(c);
  REQUIRE(v.size() == 1);
  CHECK(v[0].check == "matching");
  CHECK(v[0].layer == 0);

  GateSetSpec spec;
  CHECK_THROWS_AS(build_circuit(dup, spec), ValidationError);
}

TEST_CASE("validation reports a slightly non-unitary gate") {
  const auto arch = Architecture::brickwork(4, 2);
  Mat4 bad = linalg::identity4();
  bad[0] = 1.0 + 5e-4;  // U^dag U - I has entry ~1e-3
  std::vector<std::vector<Mat4>> gates(2, std::vector<Mat4>(2, linalg::identity4()));
  gates[1][0] = bad;
  const auto v = validate_circuit(Circuit::unvalidated(arch, gates));
  REQUIRE(v.size() == 1);
  CHECK(v[0].check == "unitarity");
  CHECK(v[0].layer == 1);
  CHECK(v[0].pair == 0);
  CHECK(validate_circuit(testing::haar_circuit(4, 2, 1)).empty());

  GateSetSpec spec;
  spec.kind = GateKind::Explicit;
  spec.matrices = gates;
  CHECK_THROWS_AS(build_circuit(arch, spec), ValidationError);
}

TEST_CASE("Haar sampling is unitary and deterministic") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    CounterRng a(seed);
    CounterRng b(seed);
    const Mat4 u = sample_haar_gate(a);
    CHECK(linalg::unitarity_deviation(u) < 1e-9);
    CHECK(linalg::max_abs_diff(u, sample_haar_gate(b)) == 0.0);
  }
  CounterRng r42(42);
  CounterRng s42(42);
  CHECK(sample_haar_gate(r42) == sample_haar_gate(s42));
}

TEST_CASE("build_circuit is a pure function of architecture and seed") {
  const auto a = testing::haar_circuit(6, 3, 9);
  const auto b = testing::haar_circuit(6, 3, 9);
  const auto c = testing::haar_circuit(6, 3, 10);
  CHECK(a.gates() == b.gates());
  CHECK(a.gates() != c.gates());
  CHECK(a.gates().size() == 3);
  CHECK(a.gates()[0].size() == 3);
}

TEST_CASE("fSim matrix entries") {
  const Mat4 z = build_fsim(0, 0, 0);
  CHECK(z[0] == cplx(1));
  CHECK(z[1 * 4 + 2] == cplx(1));
  CHECK(z[2 * 4 + 1] == cplx(1));
  CHECK(z[15] == cplx(1));
  CHECK(z[5] == cplx(0));
  const Mat4 f = build_fsim(0.3, -1.1, 2.0);
  CHECK(std::abs(f[6] - std::polar(1.0, -0.3)) < 1e-15);
  CHECK(std::abs(f[9] - std::polar(1.0, 1.1)) < 1e-15);
  CHECK(std::abs(f[15] - std::polar(1.0, -2.0)) < 1e-15);
  CounterRng rng(5);
  for (int i = 0; i < 100; ++i) {
    CHECK(linalg::unitarity_deviation(build_fsim(rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(-4, 4))) < 1e-12);
  }
}

TEST_CASE("Rz commutes through fSim with the qubits swapped") {
  CounterRng rng(11);
  for (int i = 0; i < 100; ++i) {
    const Omega w{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
    const double t1 = rng.uniform(-3, 3);
    const double t2 = rng.uniform(-3, 3);
    const Mat4 lhs = linalg::mul(linalg::kron(linalg::rz(t1), linalg::rz(t2)), build_fsim(w));
    const Mat4 rhs = linalg::mul(build_fsim(w), linalg::kron(linalg::rz(t2), linalg::rz(t1)));
    CHECK(linalg::max_abs_diff(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("square roots of Paulis square to the Pauli up to phase") {
  const Mat2 x = pauli_matrix(Pauli::X);
  const Mat2 y = pauli_matrix(Pauli::Y);
  const auto check_sq = [](const Mat2& v, const Mat2& p) {
    const Mat2 sq = linalg::mul(v, v);
    // exp(-i pi P/4)^2 = -i P
    for (int k = 0; k < 4; ++k) CHECK(std::abs(sq[k] - cplx(0, -1) * p[k]) < 1e-15);
    CHECK(linalg::unitarity_deviation(v) < 1e-15);
  };
  check_sq(sqrt_x(), x);
  check_sq(sqrt_y(), y);
  Mat2 w{};
  for (int k = 0; k < 4; ++k) w[k] = (x[k] + y[k]) / std::sqrt(2.0);
  check_sq(sqrt_w(), w);
}

TEST_CASE("dressed fSim gates are unitary and seed-determined") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CounterRng a(seed);
    CounterRng b(seed);
    const Mat4 u = sample_fsim_dressed(a, kDefaultOmega);
    CHECK(linalg::unitarity_deviation(u) < 1e-9);
    CHECK(u == sample_fsim_dressed(b, kDefaultOmega));
  }
  GateSetSpec spec;
  spec.kind = GateKind::FSimDressed;
  spec.seed = 4;
  const auto c = build_circuit(Architecture::brickwork(4, 3), spec);
  CHECK(validate_circuit(c).empty());
  CHECK(c.source(2, 1).kind == GateKind::FSimDressed);
  CHECK(c.source(0, 0).omega == kDefaultOmega);
}

TEST_CASE("strict dressing changes only the final layer") {
  GateSetSpec spec;
  spec.kind = GateKind::FSimDressed;
  spec.seed = 8;
  const auto arch = Architecture::brickwork(4, 3);
  const auto plain = build_circuit(arch, spec);
  spec.strict_final_dressing = true;
  const auto strict = build_circuit(arch, spec);
  CHECK(plain.gates()[0] == strict.gates()[0]);
  CHECK(plain.gates()[1] == strict.gates()[1]);
  CHECK(strict.strict_final_dressing());
  CHECK(validate_circuit(strict).empty());
}

TEST_CASE("per-site angles are honored") {
  GateSetSpec spec;
  spec.kind = GateKind::FSimDressed;
  spec.omegas = {{{0.1, 0.2, 0.3}, {0.4, 0.5, 0.6}}};
  const auto c = build_circuit(Architecture::brickwork(4, 1), spec);
  CHECK(c.source(0, 1).omega == Omega{0.4, 0.5, 0.6});
  spec.omegas = {{{0.1, 0.2, 0.3}}};
  CHECK_THROWS_AS(build_circuit(Architecture::brickwork(4, 1), spec), ValidationError);
}

TEST_CASE("noise model and gate set names") {
  const NoiseModel clean{0.0, true};
  const NoiseModel full{1.0, false};
  const NoiseModel above{1.5, true};
  const NoiseModel below{-0.1, true};
  CHECK_NOTHROW(clean.validate());
  CHECK_NOTHROW(full.validate());
  CHECK_THROWS_AS(above.validate(), ConfigError);
  CHECK_THROWS_AS(below.validate(), ConfigError);
  CHECK(gate_kind_from_name(gate_kind_name(GateKind::FSimDressed)) == GateKind::FSimDressed);
  CHECK(gate_kind_from_name("haar") == GateKind::Haar);
  CHECK_THROWS_AS(gate_kind_from_name("clifford"), ConfigError);
}

TEST_CASE("counter rng streams") {
  CounterRng a(derive_key(1, 2, 3));
  CounterRng b(derive_key(1, 2, 3));
  CounterRng c(derive_key(1, 3, 2));
  const auto va = a();
  CHECK(va == b());
  CHECK(va != c());
  CounterRng u(0);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double v = u.uniform();
    CHECK_FALSE((v < 0.0 || v >= 1.0));
    sum += v;
  }
  CHECK(std::abs(sum / 100000 - 0.5) < 5 * std::sqrt(1.0 / 12 / 100000));
}
