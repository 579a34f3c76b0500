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
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "ppath/bits.hpp"
#include "ppath/linalg.hpp"

namespace ppath {

/// Single-qubit Pauli label. The numeric order I, X, Y, Z is the table order.
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/// Unnormalized single-qubit Pauli matrix.
Mat2 pauli_matrix(Pauli p);

/// n-qubit Pauli label packed as two bit planes (x and z). Y sets both bits.
///
/// No normalization factor is stored; the 2^{-n/2} of the normalized operator
/// basis is applied by boundary_overlap and by the 1/4 in transfer_coefficient.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int n) : n_(n) { check_qubit_count(n); }
  PauliString(int n, std::uint64_t x_bits, std::uint64_t z_bits);

  static PauliString parse(std::string_view text);
  /// Z on every qubit of `mask`, identity elsewhere.
  static PauliString z_on(int n, std::uint64_t mask) { return PauliString(n, 0, mask); }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] std::uint64_t x_bits() const { return x_; }
  [[nodiscard]] std::uint64_t z_bits() const { return z_; }
  [[nodiscard]] std::uint64_t support() const { return x_ | z_; }
  [[nodiscard]] int weight() const { return std::popcount(x_ | z_); }
  /// Only I and Z entries.
  [[nodiscard]] bool is_diagonal() const { return x_ == 0; }
  [[nodiscard]] bool is_identity() const { return (x_ | z_) == 0; }

  [[nodiscard]] Pauli get(int q) const;
  void set(int q, Pauli p);

  [[nodiscard]] std::string str() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString&, const PauliString&) = default;

 private:
  int n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

/// Index of the two-qubit Pauli (a on the first qubit, b on the second):
/// 4*a + b, giving the order II, IX, IY, IZ, XI, ..., ZZ.
constexpr int pauli2_index(Pauli a, Pauli b) {
  return 4 * static_cast<int>(a) + static_cast<int>(b);
}
int pauli2_parse(std::string_view two_chars);
std::string pauli2_str(int index);
Mat4 pauli2_matrix(int index);

/// Tr(|x><x| s) for the normalized operator s / 2^{n/2}: zero when s has an X
/// or Y, otherwise 2^{-n/2} times (-1)^(number of Z on qubits with x_q = 1).
double boundary_overlap(const Bitstring& x, const PauliString& s);

/// 16x16 real Pauli transfer matrix of a two-qubit unitary channel.
/// Rows are output Paulis q, columns input Paulis p, both in pauli2_index order.
class TransferTable {
 public:
  static constexpr int kDim = 16;

  TransferTable() = default;
  static TransferTable identity();

  [[nodiscard]] double operator()(int q, int p) const { return entries_[static_cast<std::size_t>(q * kDim + p)]; }
  double& at(int q, int p) { return entries_[static_cast<std::size_t>(q * kDim + p)]; }
  [[nodiscard]] std::span<const double, 256> entries() const { return entries_; }

  /// max |(M M^T - I)_ij|
  [[nodiscard]] double orthogonality_deviation() const;
  /// max deviation of row II and column II from the unit vector e_II.
  [[nodiscard]] double unitality_deviation() const;

  friend bool operator==(const TransferTable&, const TransferTable&) = default;

 private:
  std::array<double, 256> entries_{};
};

inline constexpr double kUnitarityTolerance = 1e-9;
inline constexpr double kRealPartTolerance = 1e-9;

/// Tr(Q U P U^dag) / 4 for unnormalized two-qubit Paulis P (index p), Q (index q).
/// Throws ValidationError for non-unitary U and NumericalError if the trace has
/// an imaginary part above kRealPartTolerance.
double transfer_coefficient(const Mat4& u, int p, int q);

/// All 256 transfer coefficients of U, validated once.
TransferTable build_transfer_table(const Mat4& u);

/// Same arithmetic without unitarity or realness checks (diagnostics only).
TransferTable build_transfer_table_unchecked(const Mat4& u);

}  // namespace ppath
