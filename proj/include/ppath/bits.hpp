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

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

#include "ppath/error.hpp"

namespace ppath {

/// Qubit masks are single 64-bit words.
inline constexpr int kMaxQubits = 64;

// Qubit 0 is the most significant bit of every mask and basis index, so a
// mask read as an integer equals the bitstring value printed qubit 0 first.
constexpr std::uint64_t qubit_bit(int n, int q) { return std::uint64_t{1} << (n - 1 - q); }

constexpr std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

constexpr int parity(std::uint64_t v) { return std::popcount(v) & 1; }

inline void check_qubit_count(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw DimensionError("qubit count " + std::to_string(n) + " outside [1, 64]");
  }
}

/// Computational basis state on n qubits.
struct Bitstring {
  int n = 0;
  std::uint64_t value = 0;

  Bitstring() = default;
  Bitstring(int n_qubits, std::uint64_t v) : n(n_qubits), value(v) {
    check_qubit_count(n);
    if ((v & ~full_mask(n)) != 0) throw DimensionError("bitstring value exceeds qubit count");
  }

  static Bitstring zeros(int n) { return Bitstring(n, 0); }

  static Bitstring parse(std::string_view text) {
    Bitstring b(static_cast<int>(text.size()), 0);
    for (int q = 0; q < b.n; ++q) {
      char c = text[static_cast<std::size_t>(q)];
      if (c == '1') {
        b.value |= qubit_bit(b.n, q);
      } else if (c != '0') {
        throw ValidationError("bitstring may only contain 0 and 1: " + std::string(text));
      }
    }
    return b;
  }

  [[nodiscard]] bool bit(int q) const { return (value & qubit_bit(n, q)) != 0; }

  [[nodiscard]] std::string str() const {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int q = 0; q < n; ++q) {
      if (bit(q)) s[static_cast<std::size_t>(q)] = '1';
    }
    return s;
  }

  friend bool operator==(const Bitstring&, const Bitstring&) = default;
};

}  // namespace ppath
