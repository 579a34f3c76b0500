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
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ppath/circuit.hpp"
#include "ppath/paths.hpp"

namespace ppath {

/// Monte-Carlo mean with its standard error (sample stddev / sqrt(trials)).
struct EstimateReport {
  std::string name;
  double estimate = 0.0;
  double standard_error = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::optional<double> predicted;
  std::optional<double> z_score;
  /// Per-trial values in trial order; kept only when requested.
  std::vector<double> trial_values;

  /// |estimate - predicted| <= k * standard_error + abs_floor. The floor
  /// absorbs rounding when every trial is exactly the prediction up to ulps.
  [[nodiscard]] bool within(double k, double abs_floor = 0.0) const;
};

/// Report over per-trial values, reduced in index order.
EstimateReport make_report(std::string name, std::span<const double> values, std::uint64_t seed,
                           std::optional<double> predicted = std::nullopt, bool keep_values = false);

/// Random circuits on a fixed architecture. Trial t uses gate seed
/// derive_key(gates.seed, t), so every trial replays from (seed, t).
struct CircuitEnsemble {
  Architecture arch;
  GateSetSpec gates;

  [[nodiscard]] Circuit trial_circuit(std::uint64_t trial) const;
};

enum class WeightMethod { ExactHaar, MonteCarlo };
std::string weight_method_name(WeightMethod m);

struct WeightEntry {
  double value = 0.0;
  double standard_error = 0.0;
  WeightMethod method = WeightMethod::ExactHaar;
};

/// Fourier weight per degree, k = 0 .. n(d+1).
struct WeightTable {
  std::map<int, WeightEntry> entries;

  [[nodiscard]] double value(int k) const;
};

/// Sum over legal weight-k paths of (1/15)^{G(s)}, by path enumeration.
double exact_fourier_weight_haar(const Architecture& arch, int k);

/// All Haar weights at once by a dynamic program over layer support masks:
/// each active gate emits IR, RI or RR with factor 3/15, 3/15, 9/15 into an
/// interior layer and 1/15 each into the last layer. Needs n <= 12.
WeightTable haar_fourier_weights(const Architecture& arch);

/// 2^{2n} sum_{|s| = k} f(C, s, 0^n)^2 for every k, by weight-graded
/// propagation of squared transfer coefficients. Within the Pauli oracle cap.
std::vector<double> circuit_fourier_weights(const Circuit& c);

/// Monte-Carlo estimate of W_k: per circuit, 2^{2n} f^2 summed over the
/// enumerated legal weight-k paths.
EstimateReport estimate_fourier_weight(const CircuitEnsemble& ens, int k, std::uint64_t trials, int workers = 0);

/// Mean of f(C, s, x) f(C, s', x) over the ensemble; s may equal s'.
EstimateReport path_product_moment(const CircuitEnsemble& ens, const PauliPath& s, const PauliPath& s_prime,
                                   const Bitstring& x, std::uint64_t trials, int workers = 0);

/// path_product_moment for distinct paths, predicted 0. Throws
/// ValidationError when s == s'.
EstimateReport orthogonality_check(const CircuitEnsemble& ens, const PauliPath& s, const PauliPath& s_prime,
                                   const Bitstring& x, std::uint64_t trials, int workers = 0);

/// Distribution q(C, .) over 2^n outcomes for a given circuit.
using DistributionProvider = std::function<std::vector<double>(const Circuit&)>;
/// Samples from q(C, .) drawn with the provided stream.
using SampleProvider = std::function<std::vector<Bitstring>(const Circuit&, CounterRng&)>;

DistributionProvider ideal_provider();
DistributionProvider noisy_provider(NoiseModel noise);
DistributionProvider spoofer_provider();
DistributionProvider uniform_provider();

/// Draws `count` outcomes from the dense distribution of `q` by inverse CDF.
SampleProvider categorical_sampler(DistributionProvider q, std::size_t count);

/// Haar ensembles with noise on every layer: sum_{k > 0} (1 - gamma)^k W_k,
/// the expected XEB of the noisy output distribution against the ideal one.
double predicted_noisy_xeb_haar(const Architecture& arch, double gamma);

/// 2^n sum_x p(C, x) q(C, x) - 1 averaged over circuits, p ideal.
EstimateReport xeb(const CircuitEnsemble& ens, const DistributionProvider& q, std::uint64_t trials,
                   std::optional<double> predicted = std::nullopt, int workers = 0);

/// 2^n mean_i p(C, x_i) - 1 with x_i drawn from q, averaged over circuits.
/// Trial t draws with derive_key(ens.gates.seed, t, 1).
EstimateReport xeb_from_samples(const CircuitEnsemble& ens, const SampleProvider& q, std::uint64_t trials,
                                std::optional<double> predicted = std::nullopt, int workers = 0);

/// Path with Z on qubit 0 in every layer and identity elsewhere.
PauliPath spoofer_path(const Architecture& arch);

/// Product of the Z -> Z transfer coefficients along spoofer_path.
double spoofer_bias(const Circuit& c);

/// q(C, x) = 2^{-n} + f(C, s*, x) = 2^{-n} (1 + (-1)^{x_0} bias).
std::vector<double> spoofer_distribution(const Circuit& c);

/// Qubit 0 is 1 with probability (1 - bias)/2; every other qubit is a fair coin.
Bitstring spoofer_sample(const Circuit& c, CounterRng& rng);

enum class XqEstimator { SinglePath, Trivial };

/// 2^{2n} [(p - 2^{-n})^2 - (p - q)^2] at x = 0^n averaged over circuits;
/// p from the statevector oracle, q from one O(n d) path evaluation (or 2^{-n}).
EstimateReport estimate_xq(const CircuitEnsemble& ens, XqEstimator estimator, std::uint64_t trials, int workers = 0);

struct TvdCurveRow {
  int ell = 0;
  double mean_delta_sq = 0.0;
  double stderr_delta_sq = 0.0;
  double mean_delta = 0.0;
  /// sum_{k > ell} (1 - gamma)^{2k} W_k; present when every layer is noisy.
  std::optional<double> bound;
};

struct TvdCurve {
  std::vector<TvdCurveRow> rows;
  /// delta_sq[c][i]: circuit c, truncation ell_list[i]; kept for paired comparisons.
  std::vector<std::vector<double>> delta_sq;
  WeightTable weights;
  std::uint64_t circuits = 0;
  std::uint64_t seed = 0;
};

/// Delta = sum_x |p~(C, x) - q_ell(C, x)| per circuit and ell, exact. Haar
/// ensembles use haar_fourier_weights for the bound, others the mean of
/// circuit_fourier_weights over the same circuits.
TvdCurve tvd_vs_ell_curve(const CircuitEnsemble& ens, const NoiseModel& noise, const std::vector<int>& ell_list,
                          std::uint64_t circuits, int workers = 0);

struct UniformityBounds {
  double lower = 0.0;
  double upper_pinsker = 0.0;
  /// e^{-gamma d} with the unknown constant set to 1; a shape, not a bound.
  double upper_anticoncentration = 0.0;
};

UniformityBounds uniformity_bounds(int n, int d, double gamma);

/// Mean TVD between the noisy output distribution and uniform.
EstimateReport tvd_to_uniform(const CircuitEnsemble& ens, const NoiseModel& noise, std::uint64_t trials,
                              int workers = 0);

/// Mean of T(q, p)^2 over independent gates of one kind, for all 256 (q, p).
struct TransferMoments {
  std::array<double, 256> mean{};
  std::array<double, 256> standard_error{};
  std::uint64_t trials = 0;
};
TransferMoments transfer_second_moments(GateKind kind, std::uint64_t seed, std::uint64_t trials, int workers = 0);

/// Largest entry of |(Rz(t1) x Rz(t2)) fSim(w) - fSim(w) (Rz(t2) x Rz(t1))|
/// over `draws` random angle sets.
double fsim_commutation_deviation(std::uint64_t seed, std::uint64_t draws);

/// For the dressed single-qubit ensemble Rz V Rz and Paulis P != Q: the
/// Monte-Carlo means of R_{AP} R_{BQ} for all 16 (A, B), where R is the real
/// transfer matrix Tr(A U P U^dag)/2. The tensor E[U P U^dag (x) U Q U^dag]
/// vanishes iff all 16 vanish.
std::array<EstimateReport, 16> dressed_pair_moments(Pauli p, Pauli q, std::uint64_t seed, std::uint64_t trials,
                                                    int workers = 0);

}  // namespace ppath
