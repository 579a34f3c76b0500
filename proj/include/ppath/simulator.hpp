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

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ppath/circuit.hpp"
#include "ppath/paths.hpp"
#include "ppath/rng.hpp"

namespace ppath {

/// f(C, s, x): overlap of x with s_d, the transfer coefficients of every
/// gate along s, and the overlap of s_0 with 0^n. Gates that see II on both
/// sides contribute exactly 1. Illegal paths give 0 up to rounding.
double path_coefficient(const Circuit& c, const PauliPath& s, const Bitstring& x);

/// Number of non-identity factors hit by depolarizing noise along s: all
/// layers, or layers 1..d when there is no noise before the first gate layer.
int noisy_weight(const PauliPath& s, const NoiseModel& noise);

/// (1 - gamma)^noisy_weight(s) * f(C, s, x).
double noisy_path_coefficient(const Circuit& c, const PauliPath& s, const Bitstring& x, const NoiseModel& noise);

/// Literal per-path evaluation of the truncated sum: every legal path of
/// weight <= ell, one noisy_path_coefficient at a time. Reference only.
double quasi_prob_by_paths(const Circuit& c, const NoiseModel& noise, int ell, const Bitstring& x);

/// Partial assignment for marginals. Every qubit is either fixed (bit set in
/// fixed_mask, value taken from fixed_values) or traced out.
struct Marginal {
  int n = 0;
  std::uint64_t fixed_mask = 0;
  std::uint64_t fixed_values = 0;
  std::uint64_t traced_mask = 0;

  /// Qubits 0..prefix_len-1 fixed to `prefix` (qubit_bit convention), rest traced.
  static Marginal prefix(int n, int prefix_len, std::uint64_t prefix);
  void validate() const;
};

/// Truncated quasi-probability for one circuit.
///
/// Construction runs the path enumeration once. Every path contributes to
/// q(x) through (-1)^{|z & x|} with z the Z support of its last layer, so the
/// paths are summed into a sparse spectrum B(z) and each query is a signed sum
/// over at most min(paths, 2^n) entries. Enumeration is split into fixed
/// tasks; partial sums are merged in task order, so results do not depend on
/// the worker count.
class QuasiProbEvaluator {
 public:
  /// Throws ValidationError for ell < 0 or an invalid noise model.
  QuasiProbEvaluator(Circuit circuit, NoiseModel noise, int ell, int workers = 0);

  [[nodiscard]] const Circuit& circuit() const { return circuit_; }
  [[nodiscard]] const NoiseModel& noise() const { return noise_; }
  [[nodiscard]] int ell() const { return ell_; }
  [[nodiscard]] int n() const { return circuit_.n(); }

  /// Sum of (1 - gamma)^{|s|} f(C, s, x) over legal |s| <= ell.
  [[nodiscard]] double quasi_prob(const Bitstring& x) const;

  /// Sum of quasi_prob over all assignments of the traced qubits, computed
  /// from the spectrum in one pass: only z disjoint from the traced set
  /// survive, each scaled by 2^{|T|}.
  [[nodiscard]] double quasi_prob_marginal(const Marginal& m) const;

  /// Dense q over all 2^n outcomes by one Walsh-Hadamard transform.
  /// Throws SizeCapError for n > 26.
  [[nodiscard]] std::vector<double> quasi_prob_all() const;

  /// (z, B(z)) sorted by z; B includes the 2^{-n} from both boundary overlaps.
  [[nodiscard]] const std::vector<std::pair<std::uint64_t, double>>& spectrum() const { return spectrum_; }

  /// Number of legal paths summed (letter assignments included), saturating.
  [[nodiscard]] std::uint64_t paths_evaluated() const { return paths_; }

 private:
  Circuit circuit_;
  NoiseModel noise_;
  int ell_;
  std::vector<std::pair<std::uint64_t, double>> spectrum_;
  std::uint64_t paths_ = 0;
};

/// Smallest ell with (1/gamma) ln(c_margin / (epsilon sqrt(delta))) <= ell,
/// never below depth + 1. Throws ValidationError for gamma = 0 (no noise, no
/// truncation guarantee) and for parameters outside (0, 1).
int choose_truncation(double epsilon, double delta, double gamma, double c_margin, int depth);

/// Sequential conditional-bit sampler over the quasi-probability.
///
/// Bits are drawn in ascending qubit order. For qubit i the two marginals with
/// qubits < i fixed to the drawn prefix are clamped at zero; a zero total
/// falls back to a fair coin. Marginals are memoized by prefix.
class Sampler {
 public:
  explicit Sampler(const QuasiProbEvaluator& ev) : ev_(&ev) {}

  Bitstring draw(CounterRng& rng);
  /// Marginal evaluations requested so far (memo hits included): 2n per draw.
  [[nodiscard]] std::uint64_t marginal_calls() const { return calls_; }

 private:
  double marginal(int len, std::uint64_t prefix);

  const QuasiProbEvaluator* ev_;
  std::unordered_map<std::uint64_t, double> memo_[kMaxQubits + 1];
  std::uint64_t calls_ = 0;
};

/// One draw with a fresh sampler.
Bitstring sample(const QuasiProbEvaluator& ev, CounterRng& rng);

/// `count` draws; draw i uses the stream derive_key(seed, i), so the output
/// is identical for any worker count.
std::vector<Bitstring> sample_many(const QuasiProbEvaluator& ev, std::uint64_t seed, std::size_t count, int workers = 0);

}  // namespace ppath
