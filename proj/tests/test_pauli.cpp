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

#include "helpers.hpp"
#include "ppath/pauli.hpp"
#include "ppath/circuit.hpp"

using namespace ppath;

namespace {

// Independent reference: Tr(Q U P U^dag) / 4 with explicit 4x4 products.
double reference_coefficient(const Mat4& u, int p, int q) {
  const Mat4 tr = linalg::mul(linalg::mul(pauli2_matrix(q), u), linalg::mul(pauli2_matrix(p), linalg::adjoint(u)));
  cplx t = 0;
  for (int i = 0; i < 4; ++i) t += tr[static_cast<std::size_t>(5 * i)];
  return t.real() / 4.0;
}

}  // namespace

TEST_CASE("pauli string parse and print round trip") {
  const auto s = PauliString::parse("IXYZ");
  CHECK(s.n() == 4);
  CHECK(s.weight() == 3);
  CHECK(s.get(0) == Pauli::I);
  CHECK(s.get(2) == Pauli::Y);
  CHECK(s.str() == "IXYZ");
  CHECK_FALSE(s.is_diagonal());
  CHECK(PauliString::parse("ZIZ").is_diagonal());
  CHECK(PauliString::parse("III").is_identity());
  CHECK_THROWS_AS(PauliString::parse("IQ"), ValidationError);
}

TEST_CASE("weight matches the number of non-identity letters") {
  CounterRng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(20));
    PauliString s(n);
    int expected = 0;
    for (int q = 0; q < n; ++q) {
      const auto p = static_cast<Pauli>(rng.below(4));
      s.set(q, p);
      expected += p != Pauli::I;
    }
    CHECK(s.weight() == expected);
    CHECK(s.weight() <= n);
  }
}

TEST_CASE("two-qubit index order") {
  CHECK(pauli2_index(Pauli::I, Pauli::I) == 0);
  CHECK(pauli2_index(Pauli::I, Pauli::Z) == 3);
  CHECK(pauli2_index(Pauli::X, Pauli::I) == 4);
  CHECK(pauli2_index(Pauli::Z, Pauli::Z) == 15);
  CHECK(pauli2_parse("XY") == 6);
  CHECK(pauli2_str(9) == "YX");
}

TEST_CASE("boundary overlap values") {
  CHECK(boundary_overlap(Bitstring::parse("1"), PauliString::parse("Z")) == doctest::Approx(-1.0 / std::sqrt(2.0)));
  CHECK(boundary_overlap(Bitstring::parse("00"), PauliString::parse("XI")) == 0.0);
  CHECK(boundary_overlap(Bitstring::parse("00"), PauliString::parse("II")) == doctest::Approx(0.5));
  CHECK(boundary_overlap(Bitstring::parse("01"), PauliString::parse("ZY")) == 0.0);
  CHECK(boundary_overlap(Bitstring::parse("011"), PauliString::parse("ZZZ")) ==
        doctest::Approx(std::pow(2.0, -1.5)));
  CHECK_THROWS_AS(boundary_overlap(Bitstring::parse("0"), PauliString::parse("ZZ")), DimensionError);
}

TEST_CASE("diagonal overlaps square to 2^-n for every x") {
  const int n = 5;
  for (std::uint64_t z = 0; z < 32; ++z) {
    const auto s = PauliString::z_on(n, z);
    for (std::uint64_t x = 0; x < 32; ++x) {
      const double o = boundary_overlap(Bitstring(n, x), s);
      CHECK(o * o == doctest::Approx(1.0 / 32.0).epsilon(1e-14));
      CHECK((o < 0) == static_cast<bool>(parity(x & z)));
    }
  }
}

TEST_CASE("transfer coefficients of fixed gates") {
  const Mat4 id = linalg::identity4();
  CHECK(transfer_coefficient(id, pauli2_parse("XZ"), pauli2_parse("XZ")) == doctest::Approx(1.0));
  const Mat4 cx = testing::cnot();
  CHECK(transfer_coefficient(cx, pauli2_parse("XI"), pauli2_parse("XX")) == doctest::Approx(1.0));
  CHECK(std::abs(transfer_coefficient(cx, pauli2_parse("XI"), pauli2_parse("XI"))) < 1e-15);

  Mat4 bad = id;
  bad[0] = 2.0;
  CHECK_THROWS_AS(transfer_coefficient(bad, 0, 0), ValidationError);
  CHECK_THROWS_AS(build_transfer_table(bad), ValidationError);
}

TEST_CASE("identity gate gives the identity table") {
  CHECK(build_transfer_table(linalg::identity4()) == TransferTable::identity());
}

TEST_CASE("CNOT table is a signed permutation matching explicit conjugation") {
  const auto t = build_transfer_table(testing::cnot());
  for (int p = 0; p < 16; ++p) {
    int nonzero = 0;
    for (int q = 0; q < 16; ++q) {
      const double v = t(q, p);
      CHECK(v == doctest::Approx(reference_coefficient(testing::cnot(), p, q)));
      if (std::abs(v) > 1e-12) {
        ++nonzero;
        CHECK(std::abs(std::abs(v) - 1.0) < 1e-12);
      } else {
        CHECK(std::abs(v) < 1e-15);
      }
    }
    CHECK(nonzero == 1);
  }
  // Z on the target picks up Z on the control: IZ -> ZZ.
  CHECK(t(pauli2_parse("ZZ"), pauli2_parse("IZ")) == doctest::Approx(1.0));
}

TEST_CASE("Haar tables are orthogonal and unital") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CounterRng rng(seed);
    const Mat4 u = sample_haar_gate(rng);
    const auto t = build_transfer_table(u);
    CHECK(t.orthogonality_deviation() < 1e-9);
    CHECK(t.unitality_deviation() < 1e-9);
    for (int p = 0; p < 16; ++p) {
      double col = 0.0;
      for (int q = 0; q < 16; ++q) col += t(q, p) * t(q, p);
      CHECK(col == doctest::Approx(1.0).epsilon(1e-9));
    }
    CHECK(t(0, 0) == doctest::Approx(1.0));
    for (int k = 1; k < 16; ++k) {
      CHECK(std::abs(t(0, k)) < 1e-12);
      CHECK(std::abs(t(k, 0)) < 1e-12);
    }
    for (int i = 0; i < 8; ++i) {
      const int p = static_cast<int>(rng.below(16));
      const int q = static_cast<int>(rng.below(16));
      CHECK(t(q, p) == doctest::Approx(reference_coefficient(u, p, q)).epsilon(1e-12));
    }
  }
}
