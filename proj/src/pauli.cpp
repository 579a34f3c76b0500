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

#include "ppath/pauli.hpp"

#include <algorithm>
#include <cmath>

namespace ppath {

namespace {

// A Pauli matrix is monomial: row r has a single nonzero at column col[r].
struct Monomial {
  std::array<int, 4> col{};
  std::array<cplx, 4> val{};
};

Monomial monomial1(Pauli p) {
  switch (p) {
    case Pauli::I: return {{0, 1}, {cplx{1}, cplx{1}}};
    case Pauli::X: return {{1, 0}, {cplx{1}, cplx{1}}};
    case Pauli::Y: return {{1, 0}, {cplx{0, -1}, cplx{0, 1}}};
    case Pauli::Z: return {{0, 1}, {cplx{1}, cplx{-1}}};
  }
  return {};
}

Monomial monomial2(int index) {
  const Monomial a = monomial1(static_cast<Pauli>(index / 4));
  const Monomial b = monomial1(static_cast<Pauli>(index % 4));
  Monomial m;
  for (int ra = 0; ra < 2; ++ra) {
    for (int rb = 0; rb < 2; ++rb) {
      const int r = ra * 2 + rb;
      m.col[static_cast<std::size_t>(r)] = a.col[static_cast<std::size_t>(ra)] * 2 + b.col[static_cast<std::size_t>(rb)];
      m.val[static_cast<std::size_t>(r)] = a.val[static_cast<std::size_t>(ra)] * b.val[static_cast<std::size_t>(rb)];
    }
  }
  return m;
}

const std::array<Monomial, 16>& monomials() {
  static const std::array<Monomial, 16> table = [] {
    std::array<Monomial, 16> t{};
    for (int i = 0; i < 16; ++i) t[static_cast<std::size_t>(i)] = monomial2(i);
    return t;
  }();
  return table;
}

// U P U^dag using the monomial structure of P.
Mat4 conjugate(const Mat4& u, const Monomial& p) {
  // (U P)[r][c] = U[r][k] P[k][c] where P[k][col[k]] = val[k].
  Mat4 up{};
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t k = 0; k < 4; ++k) {
      up[r * 4 + static_cast<std::size_t>(p.col[k])] = u[r * 4 + k] * p.val[k];
    }
  }
  Mat4 out{};
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      cplx acc{};
      for (std::size_t k = 0; k < 4; ++k) acc += up[r * 4 + k] * std::conj(u[c * 4 + k]);
      out[r * 4 + c] = acc;
    }
  }
  return out;
}

// Tr(Q M) = sum_r Q[r][col[r]] M[col[r]][r]
cplx trace_with(const Monomial& q, const Mat4& m) {
  cplx acc{};
  for (std::size_t r = 0; r < 4; ++r) {
    acc += q.val[r] * m[static_cast<std::size_t>(q.col[r]) * 4 + r];
  }
  return acc;
}

void check_unitary(const Mat4& u) {
  const double dev = linalg::unitarity_deviation(u);
  if (!(dev <= kUnitarityTolerance)) {
    throw ValidationError("gate is not unitary: max |U^dag U - I| = " + std::to_string(dev));
  }
}

TransferTable build_table(const Mat4& u, bool check_real) {
  TransferTable table;
  const auto& mono = monomials();
  for (int p = 0; p < 16; ++p) {
    const Mat4 m = conjugate(u, mono[static_cast<std::size_t>(p)]);
    for (int q = 0; q < 16; ++q) {
      const cplx tr = trace_with(mono[static_cast<std::size_t>(q)], m) / 4.0;
      if (check_real && std::abs(tr.imag()) > kRealPartTolerance) {
        throw NumericalError("transfer coefficient has imaginary part " + std::to_string(tr.imag()));
      }
      table.at(q, p) = tr.real();
    }
  }
  return table;
}

}  // namespace

char pauli_char(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default: throw ValidationError(std::string("not a Pauli symbol: '") + c + "'");
  }
}

Mat2 pauli_matrix(Pauli p) {
  switch (p) {
    case Pauli::I: return {cplx{1}, cplx{}, cplx{}, cplx{1}};
    case Pauli::X: return {cplx{}, cplx{1}, cplx{1}, cplx{}};
    case Pauli::Y: return {cplx{}, cplx{0, -1}, cplx{0, 1}, cplx{}};
    case Pauli::Z: return {cplx{1}, cplx{}, cplx{}, cplx{-1}};
  }
  return {};
}

PauliString::PauliString(int n, std::uint64_t x_bits, std::uint64_t z_bits) : n_(n), x_(x_bits), z_(z_bits) {
  check_qubit_count(n);
  if (((x_ | z_) & ~full_mask(n)) != 0) throw DimensionError("Pauli bits exceed qubit count");
}

PauliString PauliString::parse(std::string_view text) {
  PauliString s(static_cast<int>(text.size()));
  for (int q = 0; q < s.n_; ++q) s.set(q, pauli_from_char(text[static_cast<std::size_t>(q)]));
  return s;
}

Pauli PauliString::get(int q) const {
  const std::uint64_t bit = qubit_bit(n_, q);
  const bool x = (x_ & bit) != 0;
  const bool z = (z_ & bit) != 0;
  if (x) return z ? Pauli::Y : Pauli::X;
  return z ? Pauli::Z : Pauli::I;
}

void PauliString::set(int q, Pauli p) {
  if (q < 0 || q >= n_) throw DimensionError("qubit index out of range");
  const std::uint64_t bit = qubit_bit(n_, q);
  x_ &= ~bit;
  z_ &= ~bit;
  if (p == Pauli::X || p == Pauli::Y) x_ |= bit;
  if (p == Pauli::Z || p == Pauli::Y) z_ |= bit;
}

std::string PauliString::str() const {
  std::string s(static_cast<std::size_t>(n_), 'I');
  for (int q = 0; q < n_; ++q) s[static_cast<std::size_t>(q)] = pauli_char(get(q));
  return s;
}

int pauli2_parse(std::string_view two_chars) {
  if (two_chars.size() != 2) throw ValidationError("two-qubit Pauli needs two symbols");
  return pauli2_index(pauli_from_char(two_chars[0]), pauli_from_char(two_chars[1]));
}

std::string pauli2_str(int index) {
  return {pauli_char(static_cast<Pauli>(index / 4)), pauli_char(static_cast<Pauli>(index % 4))};
}

Mat4 pauli2_matrix(int index) {
  return linalg::kron(pauli_matrix(static_cast<Pauli>(index / 4)), pauli_matrix(static_cast<Pauli>(index % 4)));
}

double boundary_overlap(const Bitstring& x, const PauliString& s) {
  if (x.n != s.n()) throw DimensionError("bitstring and Pauli string lengths differ");
  if (!s.is_diagonal()) return 0.0;
  const double mag = std::exp2(-0.5 * s.n());
  return parity(x.value & s.z_bits()) ? -mag : mag;
}

TransferTable TransferTable::identity() {
  TransferTable t;
  for (int i = 0; i < kDim; ++i) t.at(i, i) = 1.0;
  return t;
}

double TransferTable::orthogonality_deviation() const {
  double worst = 0.0;
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      double dot = 0.0;
      for (int k = 0; k < kDim; ++k) dot += (*this)(i, k) * (*this)(j, k);
      worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

double TransferTable::unitality_deviation() const {
  double worst = std::abs((*this)(0, 0) - 1.0);
  for (int i = 1; i < kDim; ++i) {
    worst = std::max({worst, std::abs((*this)(0, i)), std::abs((*this)(i, 0))});
  }
  return worst;
}

double transfer_coefficient(const Mat4& u, int p, int q) {
  if (p < 0 || p >= 16 || q < 0 || q >= 16) throw DimensionError("two-qubit Pauli index out of range");
  check_unitary(u);
  const auto& mono = monomials();
  const cplx tr = trace_with(mono[static_cast<std::size_t>(q)], conjugate(u, mono[static_cast<std::size_t>(p)])) / 4.0;
  if (std::abs(tr.imag()) > kRealPartTolerance) {
    throw NumericalError("transfer coefficient has imaginary part " + std::to_string(tr.imag()));
  }
  return tr.real();
}

TransferTable build_transfer_table(const Mat4& u) {
  check_unitary(u);
  return build_table(u, true);
}

TransferTable build_transfer_table_unchecked(const Mat4& u) { return build_table(u, false); }

}  // namespace ppath
