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
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "ppath/linalg.hpp"
#include "ppath/pauli.hpp"
#include "ppath/rng.hpp"

namespace ppath {

/// Unordered qubit pair acted on by one two-qubit gate. `a` is the more
/// significant qubit of the gate matrix.
struct GatePair {
  int a = 0;
  int b = 0;
  friend bool operator==(const GatePair&, const GatePair&) = default;
};

/// Per-layer perfect matchings of the qubits. Layer l maps path layer s_l to
/// s_{l+1}. An Architecture may hold an invalid matching so that it can be
/// reported by validation; everything that simulates calls require_valid().
class Architecture {
 public:
  Architecture() = default;
  Architecture(int n, std::vector<std::vector<GatePair>> layers);

  /// 1D brickwork with periodic boundary: even layers pair (2i, 2i+1), odd
  /// layers pair (2i+1, 2i+2 mod n).
  static Architecture brickwork(int n, int depth);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int depth() const { return static_cast<int>(layers_.size()); }
  [[nodiscard]] const std::vector<std::vector<GatePair>>& layers() const { return layers_; }
  [[nodiscard]] const std::vector<GatePair>& layer(int l) const { return layers_[static_cast<std::size_t>(l)]; }
  [[nodiscard]] int gates_per_layer() const { return n_ / 2; }

  /// One message per failed structural check; empty iff valid.
  [[nodiscard]] std::vector<std::string> violations() const;
  [[nodiscard]] bool valid() const { return valid_; }
  void require_valid() const;

  /// Mask (see qubit_bit) of the two qubits of gate g in layer l.
  [[nodiscard]] std::uint64_t pair_mask(int l, int g) const {
    return pair_masks_[static_cast<std::size_t>(l)][static_cast<std::size_t>(g)];
  }

  friend bool operator==(const Architecture& x, const Architecture& y) {
    return x.n_ == y.n_ && x.layers_ == y.layers_;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<GatePair>> layers_;
  std::vector<std::vector<std::uint64_t>> pair_masks_;
  bool valid_ = false;
};

/// Depolarizing channel rate and placement of the initial noise layer.
struct NoiseModel {
  double gamma = 0.0;
  bool noise_before_first_layer = true;

  void validate() const;
};

enum class GateKind { Haar, FSimDressed, Explicit };

std::string gate_kind_name(GateKind k);
GateKind gate_kind_from_name(const std::string& name);

using Omega = std::array<double, 3>;
inline constexpr Omega kDefaultOmega{0.0, 0.0, std::numbers::pi / 6};

/// How a gate was produced; kept for serialization.
struct GateSource {
  GateKind kind = GateKind::Haar;
  Omega omega = kDefaultOmega;
};

struct GateSetSpec {
  GateKind kind = GateKind::Haar;
  std::uint64_t seed = 0;
  /// FSimDressed: per (layer, pair) angle triples; empty means kDefaultOmega everywhere.
  std::vector<std::vector<Omega>> omegas;
  /// Explicit: per (layer, pair) matrices.
  std::vector<std::vector<Mat4>> matrices;
  /// Left-multiply final-layer gates by uniformly random two-qubit Paulis.
  bool strict_final_dressing = false;
};

/// Architecture plus one validated unitary and cached TransferTable per site.
class Circuit {
 public:
  Circuit() = default;
  /// Throws ValidationError unless the architecture and every gate are valid.
  Circuit(Architecture arch, std::vector<std::vector<Mat4>> gates, std::vector<std::vector<GateSource>> sources,
          std::uint64_t seed, bool strict_final_dressing = false);

  /// Skips validation and builds tables without checks. For exercising
  /// validate_circuit on broken input; do not simulate the result.
  static Circuit unvalidated(Architecture arch, std::vector<std::vector<Mat4>> gates);

  [[nodiscard]] int n() const { return arch_.n(); }
  [[nodiscard]] int depth() const { return arch_.depth(); }
  [[nodiscard]] const Architecture& architecture() const { return arch_; }
  [[nodiscard]] const Mat4& gate(int l, int g) const { return gates_[static_cast<std::size_t>(l)][static_cast<std::size_t>(g)]; }
  [[nodiscard]] const TransferTable& table(int l, int g) const {
    return tables_[static_cast<std::size_t>(l)][static_cast<std::size_t>(g)];
  }
  [[nodiscard]] const GateSource& source(int l, int g) const {
    return sources_[static_cast<std::size_t>(l)][static_cast<std::size_t>(g)];
  }
  [[nodiscard]] const std::vector<std::vector<Mat4>>& gates() const { return gates_; }
  [[nodiscard]] std::uint64_t seed() const { return seed_; }
  [[nodiscard]] bool strict_final_dressing() const { return strict_final_dressing_; }

 private:
  Architecture arch_;
  std::vector<std::vector<Mat4>> gates_;
  std::vector<std::vector<TransferTable>> tables_;
  std::vector<std::vector<GateSource>> sources_;
  std::uint64_t seed_ = 0;
  bool strict_final_dressing_ = false;
};

/// Exact Haar sample: Gram-Schmidt QR of a complex Ginibre matrix, with R's
/// diagonal real positive.
Mat4 sample_haar_gate(CounterRng& rng);

Mat4 build_fsim(double omega1, double omega2, double omega3);
inline Mat4 build_fsim(const Omega& w) { return build_fsim(w[0], w[1], w[2]); }

/// exp(-i pi P / 4) = (I - iP)/sqrt(2) for P in {X, Y, W = (X+Y)/sqrt(2)}.
Mat2 sqrt_x();
Mat2 sqrt_y();
Mat2 sqrt_w();

/// (V_a Rz(t_a) (x) V_b Rz(t_b)) fSim(omega) (Rz(t_c) (x) Rz(t_d)), angles
/// uniform on [-pi, pi], V uniform on {sqrt X, sqrt Y, sqrt W}.
Mat4 sample_fsim_dressed(CounterRng& rng, const Omega& omega);

/// Effective single-qubit ensemble Rz(t1) V Rz(t2).
Mat2 sample_dressed_single_qubit(CounterRng& rng);

/// Random stream of gate site (layer, pair) under `seed`.
inline CounterRng site_rng(std::uint64_t seed, int layer, int pair) {
  return CounterRng(derive_key(seed, static_cast<std::uint64_t>(layer), static_cast<std::uint64_t>(pair)));
}

/// Gate of kind `kind` at a site, drawn from the site's stream.
Mat4 sample_site_gate(GateKind kind, std::uint64_t seed, int layer, int pair, const Omega& omega,
                      bool final_layer_dressing);

/// Deterministic in (arch, spec). Throws ValidationError for invalid matchings
/// and non-unitary explicit gates.
Circuit build_circuit(const Architecture& arch, const GateSetSpec& spec);

struct Violation {
  int layer = -1;  ///< -1 when the check is global
  int pair = -1;   ///< -1 when the check concerns the whole layer
  std::string check;
  std::string message;
};

/// Never throws; empty iff every invariant holds.
std::vector<Violation> validate_circuit(const Circuit& c);

}  // namespace ppath
