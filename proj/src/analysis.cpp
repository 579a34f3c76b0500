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

#include "ppath/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ppath/kernels.hpp"
#include "ppath/oracle.hpp"
#include "ppath/parallel.hpp"
#include "ppath/simulator.hpp"
#include "ppath/summation.hpp"

namespace ppath {

namespace {

template <class Fn>
std::vector<double> run_trials(std::uint64_t trials, int workers, Fn&& fn) {
  std::vector<double> values(static_cast<std::size_t>(trials));
  parallel_for(values.size(), workers, [&](std::size_t t) { values[t] = fn(static_cast<std::uint64_t>(t)); });
  return values;
}

// Supports of exact weight k, in stream order.
template <class Fn>
void for_each_support_of_weight(const Architecture& arch, int k, Fn&& fn) {
  for (const auto& task : split_path_tasks(arch, k, std::numeric_limits<std::uint64_t>::max())) {
    if (task.k == k) for_each_support(arch, task, fn);
  }
}

int active_gate_count(const Architecture& arch, std::span<const std::uint64_t> masks) {
  int g = 0;
  for (int l = 0; l < arch.depth(); ++l) {
    for (int i = 0; i < arch.gates_per_layer(); ++i) {
      if ((masks[static_cast<std::size_t>(l)] & arch.pair_mask(l, i)) != 0) ++g;
    }
  }
  return g;
}

std::size_t diagonal_index(int n, std::uint64_t z) {
  std::size_t idx = 0;
  for (int q = 0; q < n; ++q) idx = idx * 4 + ((z & qubit_bit(n, q)) != 0 ? 3 : 0);
  return idx;
}

double real_transfer(const Mat2& u, Pauli a, Pauli p) {
  const Mat2 conj = linalg::mul(linalg::mul(u, pauli_matrix(p)), linalg::adjoint(u));
  const Mat2 prod = linalg::mul(pauli_matrix(a), conj);
  return 0.5 * (prod[0] + prod[3]).real();
}

}  // namespace

bool EstimateReport::within(double k, double abs_floor) const {
  if (!predicted) return false;
  return std::abs(estimate - *predicted) <= k * standard_error + abs_floor;
}

EstimateReport make_report(std::string name, std::span<const double> values, std::uint64_t seed,
                           std::optional<double> predicted, bool keep_values) {
  EstimateReport r;
  r.name = std::move(name);
  r.trials = values.size();
  r.seed = seed;
  r.predicted = predicted;
  if (values.empty()) return r;
  CompensatedSum sum;
  for (double v : values) sum.add(v);
  const double mean = sum.value() / static_cast<double>(values.size());
  CompensatedSum sq;
  for (double v : values) sq.add((v - mean) * (v - mean));
  r.estimate = mean;
  if (values.size() > 1) {
    const double var = sq.value() / static_cast<double>(values.size() - 1);
    r.standard_error = std::sqrt(var / static_cast<double>(values.size()));
  }
  if (predicted) {
    const double diff = mean - *predicted;
    if (r.standard_error > 0.0) {
      r.z_score = diff / r.standard_error;
    } else {
      r.z_score = diff == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
    }
  }
  if (keep_values) r.trial_values.assign(values.begin(), values.end());
  return r;
}

Circuit CircuitEnsemble::trial_circuit(std::uint64_t trial) const {
  GateSetSpec spec = gates;
  spec.seed = derive_key(gates.seed, trial);
  return build_circuit(arch, spec);
}

std::string weight_method_name(WeightMethod m) { return m == WeightMethod::ExactHaar ? "exact-haar" : "monte-carlo"; }

double WeightTable::value(int k) const {
  const auto it = entries.find(k);
  return it == entries.end() ? 0.0 : it->second.value;
}

double exact_fourier_weight_haar(const Architecture& arch, int k) {
  arch.require_valid();
  if (k < 0 || k > full_weight(arch)) return 0.0;
  CompensatedSum sum;
  for_each_support_of_weight(arch, k, [&](const SupportPath& sp) {
    const double mult = static_cast<double>(letter_multiplicity(sp.masks));
    sum.add(mult * std::pow(1.0 / 15.0, active_gate_count(arch, sp.masks)));
  });
  return sum.value();
}

WeightTable haar_fourier_weights(const Architecture& arch) {
  arch.require_valid();
  const int n = arch.n();
  const int d = arch.depth();
  if (n > 12) throw SizeCapError("Haar weight recursion limited to 12 qubits");
  const int top = full_weight(arch);
  const std::size_t masks = std::size_t{1} << n;
  const std::size_t width = static_cast<std::size_t>(top + 1);
  // dp[m * width + w]: layers so far end on support m with accumulated weight w.
  std::vector<double> dp(masks * width, 0.0);
  for (std::uint64_t m = 0; m < masks; ++m) dp[m * width + static_cast<std::size_t>(std::popcount(m))] = 1.0;
  std::vector<double> next(dp.size());

  for (int l = 0; l < d; ++l) {
    const bool last = l + 1 == d;
    const double single = last ? 1.0 / 15.0 : 3.0 / 15.0;
    const double both = last ? 1.0 / 15.0 : 9.0 / 15.0;
    std::fill(next.begin(), next.end(), 0.0);
    std::vector<std::uint64_t> a_bits;
    std::vector<std::uint64_t> b_bits;
    for (std::uint64_t m = 0; m < masks; ++m) {
      const double* row = dp.data() + m * width;
      a_bits.clear();
      b_bits.clear();
      for (const auto& p : arch.layer(l)) {
        if ((m & (qubit_bit(n, p.a) | qubit_bit(n, p.b))) == 0) continue;
        a_bits.push_back(qubit_bit(n, p.a));
        b_bits.push_back(qubit_bit(n, p.b));
      }
      std::size_t combos = 1;
      for (std::size_t i = 0; i < a_bits.size(); ++i) combos *= 3;
      for (std::size_t c = 0; c < combos; ++c) {
        std::uint64_t out = 0;
        double factor = 1.0;
        std::size_t rest = c;
        for (std::size_t i = 0; i < a_bits.size(); ++i, rest /= 3) {
          switch (rest % 3) {
            case 0: out |= b_bits[i]; factor *= single; break;
            case 1: out |= a_bits[i]; factor *= single; break;
            default: out |= a_bits[i] | b_bits[i]; factor *= both; break;
          }
        }
        const auto shift = static_cast<std::size_t>(std::popcount(out));
        double* dst = next.data() + out * width;
        for (std::size_t w = 0; w + shift < width; ++w) {
          if (row[w] != 0.0) dst[w + shift] += row[w] * factor;
        }
      }
    }
    std::swap(dp, next);
  }

  WeightTable t;
  for (int k = 0; k <= top; ++k) {
    CompensatedSum s;
    for (std::uint64_t m = 0; m < masks; ++m) s.add(dp[m * width + static_cast<std::size_t>(k)]);
    t.entries[k] = WeightEntry{s.value(), 0.0, WeightMethod::ExactHaar};
  }
  return t;
}

std::vector<double> circuit_fourier_weights(const Circuit& c) {
  const OracleLimits limits = OracleLimits::from_env();
  const int n = c.n();
  if (n > limits.max_pauli_qubits) {
    throw SizeCapError("Pauli propagation oracle limited to " + std::to_string(limits.max_pauli_qubits) + " qubits");
  }
  const int d = c.depth();
  const int top = n * (d + 1);
  const std::size_t dim = std::size_t{1} << (2 * n);
  std::vector<std::uint8_t> weight(dim, 0);
  for (std::size_t i = 1; i < dim; ++i) weight[i] = static_cast<std::uint8_t>(weight[i / 4] + (i % 4 != 0 ? 1 : 0));

  std::vector<std::vector<std::array<double, 256>>> squared(static_cast<std::size_t>(d));
  for (int l = 0; l < d; ++l) {
    for (int g = 0; g < c.architecture().gates_per_layer(); ++g) {
      std::array<double, 256> sq{};
      const auto e = c.table(l, g).entries();
      for (std::size_t i = 0; i < 256; ++i) sq[i] = e[i] * e[i];
      squared[static_cast<std::size_t>(l)].push_back(sq);
    }
  }

  std::vector<std::vector<double>> buckets(static_cast<std::size_t>(top + 1), std::vector<double>(dim, 0.0));
  const double start = std::ldexp(1.0, -n);  // overlap(0^n, s_0)^2
  for (std::uint64_t z = 0; z < (std::uint64_t{1} << n); ++z) {
    const std::size_t i = diagonal_index(n, z);
    buckets[weight[i]][i] = start;
  }
  std::vector<std::vector<double>> next(buckets.size(), std::vector<double>(dim, 0.0));
  const auto& k = kernels::active_kernels();
  for (int l = 0; l < d; ++l) {
    const int reach = n * (l + 1);
    const auto& layer = c.architecture().layer(l);
    for (int w = 0; w <= reach; ++w) {
      for (std::size_t g = 0; g < layer.size(); ++g) {
        k.apply_transfer(buckets[static_cast<std::size_t>(w)].data(), n, layer[g].a, layer[g].b,
                         squared[static_cast<std::size_t>(l)][g].data());
      }
    }
    for (auto& b : next) std::fill(b.begin(), b.end(), 0.0);
    for (int w = 0; w <= reach; ++w) {
      const auto& src = buckets[static_cast<std::size_t>(w)];
      for (std::size_t i = 0; i < dim; ++i) {
        if (src[i] != 0.0) next[static_cast<std::size_t>(w + weight[i])][i] += src[i];
      }
    }
    std::swap(buckets, next);
  }

  // W_k = 2^{2n} sum over diagonal s_d of bucket_k(s_d) * overlap(0^n, s_d)^2
  std::vector<double> out(static_cast<std::size_t>(top + 1), 0.0);
  for (int w = 0; w <= top; ++w) {
    CompensatedSum s;
    for (std::uint64_t z = 0; z < (std::uint64_t{1} << n); ++z) s.add(buckets[static_cast<std::size_t>(w)][diagonal_index(n, z)]);
    out[static_cast<std::size_t>(w)] = std::ldexp(s.value(), n);
  }
  return out;
}

EstimateReport estimate_fourier_weight(const CircuitEnsemble& ens, int k, std::uint64_t trials, int workers) {
  ens.arch.require_valid();
  const int n = ens.arch.n();
  const Bitstring zero = Bitstring::zeros(n);
  const double scale = std::ldexp(1.0, 2 * n);
  auto values = run_trials(trials, workers, [&](std::uint64_t t) {
    const Circuit c = ens.trial_circuit(t);
    CompensatedSum sum;
    for_each_support_of_weight(ens.arch, k, [&](const SupportPath& sp) {
      for_each_letter_assignment(ens.arch, sp, [&](std::span<const PauliString> layers) {
        const PauliPath s(std::vector<PauliString>(layers.begin(), layers.end()), ens.arch);
        const double f = path_coefficient(c, s, zero);
        sum.add(scale * f * f);
      });
    });
    return sum.value();
  });
  std::optional<double> predicted;
  if (ens.gates.kind == GateKind::Haar) predicted = exact_fourier_weight_haar(ens.arch, k);
  return make_report("fourier_weight_k" + std::to_string(k), values, ens.gates.seed, predicted);
}

EstimateReport path_product_moment(const CircuitEnsemble& ens, const PauliPath& s, const PauliPath& s_prime,
                                   const Bitstring& x, std::uint64_t trials, int workers) {
  auto values = run_trials(trials, workers, [&](std::uint64_t t) {
    const Circuit c = ens.trial_circuit(t);
    return path_coefficient(c, s, x) * path_coefficient(c, s_prime, x);
  });
  std::optional<double> predicted;
  if (s == s_prime && s.weight() == 0) predicted = std::ldexp(1.0, -2 * ens.arch.n());
  if (s != s_prime) predicted = 0.0;
  return make_report("path_product", values, ens.gates.seed, predicted);
}

EstimateReport orthogonality_check(const CircuitEnsemble& ens, const PauliPath& s, const PauliPath& s_prime,
                                   const Bitstring& x, std::uint64_t trials, int workers) {
  if (s == s_prime) throw ValidationError("orthogonality check needs two distinct paths");
  auto r = path_product_moment(ens, s, s_prime, x, trials, workers);
  r.name = "orthogonality";
  return r;
}

DistributionProvider ideal_provider() {
  return [](const Circuit& c) { return ideal_distribution(c); };
}

DistributionProvider noisy_provider(NoiseModel noise) {
  return [noise](const Circuit& c) { return noisy_distribution(c, noise); };
}

DistributionProvider spoofer_provider() {
  return [](const Circuit& c) { return spoofer_distribution(c); };
}

DistributionProvider uniform_provider() {
  return [](const Circuit& c) { return std::vector<double>(std::size_t{1} << c.n(), std::ldexp(1.0, -c.n())); };
}

SampleProvider categorical_sampler(DistributionProvider q, std::size_t count) {
  return [q = std::move(q), count](const Circuit& c, CounterRng& rng) {
    const auto dist = q(c);
    std::vector<double> cdf(dist.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
      acc += std::max(dist[i], 0.0);
      cdf[i] = acc;
    }
    if (!(acc > 0.0)) throw NumericalError("distribution has no positive mass");
    std::vector<Bitstring> out;
    out.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
      const double u = rng.uniform() * acc;
      auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
      if (it == cdf.end()) --it;
      out.emplace_back(c.n(), static_cast<std::uint64_t>(it - cdf.begin()));
    }
    return out;
  };
}

double predicted_noisy_xeb_haar(const Architecture& arch, double gamma) {
  const WeightTable w = haar_fourier_weights(arch);
  CompensatedSum s;
  for (const auto& [k, e] : w.entries) {
    if (k > 0) s.add(std::pow(1.0 - gamma, k) * e.value);
  }
  return s.value();
}

EstimateReport xeb(const CircuitEnsemble& ens, const DistributionProvider& q, std::uint64_t trials,
                   std::optional<double> predicted, int workers) {
  auto values = run_trials(trials, workers, [&](std::uint64_t t) {
    const Circuit c = ens.trial_circuit(t);
    const auto p = ideal_distribution(c);
    const auto qv = q(c);
    if (qv.size() != p.size()) throw DimensionError("XEB distributions differ in length");
    CompensatedSum s;
    for (std::size_t x = 0; x < p.size(); ++x) s.add(p[x] * qv[x]);
    return std::ldexp(s.value(), c.n()) - 1.0;
  });
  return make_report("xeb", values, ens.gates.seed, predicted);
}

EstimateReport xeb_from_samples(const CircuitEnsemble& ens, const SampleProvider& q, std::uint64_t trials,
                                std::optional<double> predicted, int workers) {
  auto values = run_trials(trials, workers, [&](std::uint64_t t) {
    const Circuit c = ens.trial_circuit(t);
    const auto p = ideal_distribution(c);
    CounterRng rng(derive_key(ens.gates.seed, t, 1));
    const auto xs = q(c, rng);
    if (xs.empty()) throw ValidationError("sample provider returned no samples");
    CompensatedSum s;
    for (const auto& x : xs) s.add(p[x.value]);
    return std::ldexp(s.value() / static_cast<double>(xs.size()), c.n()) - 1.0;
  });
  return make_report("xeb_samples", values, ens.gates.seed, predicted);
}

PauliPath spoofer_path(const Architecture& arch) {
  const PauliString z0 = PauliString::z_on(arch.n(), qubit_bit(arch.n(), 0));
  return PauliPath(std::vector<PauliString>(static_cast<std::size_t>(arch.depth() + 1), z0), arch);
}

double spoofer_bias(const Circuit& c) {
  return std::ldexp(path_coefficient(c, spoofer_path(c.architecture()), Bitstring::zeros(c.n())), c.n());
}

std::vector<double> spoofer_distribution(const Circuit& c) {
  if (c.n() > 26) throw SizeCapError("dense spoofer distribution limited to 26 qubits");
  const double bias = spoofer_bias(c);
  const int n = c.n();
  std::vector<double> q(std::size_t{1} << n);
  const std::uint64_t first = qubit_bit(n, 0);
  const double base = std::ldexp(1.0, -n);
  for (std::uint64_t x = 0; x < q.size(); ++x) q[x] = base * ((x & first) != 0 ? 1.0 - bias : 1.0 + bias);
  return q;
}

Bitstring spoofer_sample(const Circuit& c, CounterRng& rng) {
  const int n = c.n();
  const double bias = spoofer_bias(c);
  std::uint64_t v = rng.uniform() < 0.5 * (1.0 - bias) ? qubit_bit(n, 0) : 0;
  for (int q = 1; q < n; ++q) {
    if (((rng)() >> 63) != 0) v |= qubit_bit(n, q);
  }
  return Bitstring(n, v);
}

EstimateReport estimate_xq(const CircuitEnsemble& ens, XqEstimator estimator, std::uint64_t trials, int workers) {
  const int d = ens.arch.depth();
  auto values = run_trials(trials, workers, [&](std::uint64_t t) {
    const Circuit c = ens.trial_circuit(t);
    const auto psi = statevector(c);
    // Scaled by 2^n: P = 2^n p(C, 0^n), Q = 2^n q(C, 0^n).
    const double p = std::ldexp(std::norm(psi[0]), c.n());
    const double q = estimator == XqEstimator::SinglePath ? 1.0 + spoofer_bias(c) : 1.0;
    return (p - 1.0) * (p - 1.0) - (p - q) * (p - q);
  });
  std::optional<double> predicted;
  if (estimator == XqEstimator::Trivial) predicted = 0.0;
  if (estimator == XqEstimator::SinglePath && ens.gates.kind == GateKind::Haar) predicted = std::pow(1.0 / 15.0, d);
  return make_report(estimator == XqEstimator::SinglePath ? "xq_single_path" : "xq_trivial", values, ens.gates.seed,
                     predicted);
}

TvdCurve tvd_vs_ell_curve(const CircuitEnsemble& ens, const NoiseModel& noise, const std::vector<int>& ell_list,
                          std::uint64_t circuits, int workers) {
  noise.validate();
  ens.arch.require_valid();
  for (int ell : ell_list) {
    if (ell < 0) throw ValidationError("truncation weights must be nonnegative");
  }
  const int top = full_weight(ens.arch);
  const bool haar = ens.gates.kind == GateKind::Haar;
  TvdCurve curve;
  curve.circuits = circuits;
  curve.seed = ens.gates.seed;
  curve.delta_sq.assign(static_cast<std::size_t>(circuits), {});
  std::vector<std::vector<double>> deltas(static_cast<std::size_t>(circuits));
  std::vector<std::vector<double>> weights(haar ? 0 : static_cast<std::size_t>(circuits));

  parallel_for(static_cast<std::size_t>(circuits), workers, [&](std::size_t i) {
    const Circuit c = ens.trial_circuit(i);
    const auto exact = noisy_distribution(c, noise);
    const auto graded = graded_truncated_distributions(c, noise);
    auto& dsq = curve.delta_sq[i];
    auto& dl = deltas[i];
    for (int ell : ell_list) {
      const double delta = l1_distance(exact, graded[static_cast<std::size_t>(std::min(ell, top))]);
      dl.push_back(delta);
      dsq.push_back(delta * delta);
    }
    if (!haar) weights[i] = circuit_fourier_weights(c);
  });

  if (haar) {
    curve.weights = haar_fourier_weights(ens.arch);
  } else {
    for (int k = 0; k <= top; ++k) {
      std::vector<double> col;
      col.reserve(weights.size());
      for (const auto& w : weights) col.push_back(w[static_cast<std::size_t>(k)]);
      const auto r = make_report("w", col, ens.gates.seed);
      curve.weights.entries[k] = WeightEntry{r.estimate, r.standard_error, WeightMethod::MonteCarlo};
    }
  }

  const double keep2 = (1.0 - noise.gamma) * (1.0 - noise.gamma);
  for (std::size_t j = 0; j < ell_list.size(); ++j) {
    std::vector<double> sq;
    std::vector<double> dl;
    for (std::size_t i = 0; i < curve.delta_sq.size(); ++i) {
      sq.push_back(curve.delta_sq[i][j]);
      dl.push_back(deltas[i][j]);
    }
    const auto rsq = make_report("delta_sq", sq, ens.gates.seed);
    const auto rd = make_report("delta", dl, ens.gates.seed);
    TvdCurveRow row;
    row.ell = ell_list[j];
    row.mean_delta_sq = rsq.estimate;
    row.stderr_delta_sq = rsq.standard_error;
    row.mean_delta = rd.estimate;
    if (noise.noise_before_first_layer) {
      CompensatedSum b;
      for (int k = ell_list[j] + 1; k <= top; ++k) b.add(std::pow(keep2, k) * curve.weights.value(k));
      row.bound = b.value();
    }
    curve.rows.push_back(row);
  }
  return curve;
}

UniformityBounds uniformity_bounds(int n, int d, double gamma) {
  if (n < 1 || d < 0) throw ValidationError("uniformity bounds need n >= 1 and d >= 0");
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw ValidationError("gamma must lie in [0, 1]");
  UniformityBounds b;
  b.lower = (1.0 / 12.0) * std::pow(1.0 - gamma, 2 * d) * std::pow(0.4, d);
  b.upper_pinsker = std::sqrt(0.5 * n * std::exp(-gamma * d));
  b.upper_anticoncentration = std::exp(-gamma * d);
  return b;
}

EstimateReport tvd_to_uniform(const CircuitEnsemble& ens, const NoiseModel& noise, std::uint64_t trials,
                              int workers) {
  const int n = ens.arch.n();
  const std::vector<double> uniform(std::size_t{1} << n, std::ldexp(1.0, -n));
  auto values = run_trials(trials, workers, [&](std::uint64_t t) {
    return tvd(noisy_distribution(ens.trial_circuit(t), noise), uniform);
  });
  return make_report("tvd_to_uniform", values, ens.gates.seed);
}

TransferMoments transfer_second_moments(GateKind kind, std::uint64_t seed, std::uint64_t trials, int workers) {
  if (kind == GateKind::Explicit) throw ValidationError("transfer moments need a random gate set");
  constexpr std::uint64_t kChunk = 1024;
  const std::size_t chunks = static_cast<std::size_t>((trials + kChunk - 1) / kChunk);
  struct Partial {
    std::array<CompensatedSum, 256> sum;
    std::array<CompensatedSum, 256> sumsq;
  };
  std::vector<Partial> partial(chunks);
  parallel_for(chunks, workers, [&](std::size_t ci) {
    auto& part = partial[ci];
    const std::uint64_t end = std::min<std::uint64_t>(trials, (ci + 1) * kChunk);
    for (std::uint64_t t = ci * kChunk; t < end; ++t) {
      CounterRng rng(derive_key(seed, t));
      const Mat4 u = kind == GateKind::Haar ? sample_haar_gate(rng) : sample_fsim_dressed(rng, kDefaultOmega);
      const auto e = build_transfer_table(u).entries();
      for (std::size_t i = 0; i < 256; ++i) {
        const double v = e[i] * e[i];
        part.sum[i].add(v);
        part.sumsq[i].add(v * v);
      }
    }
  });
  TransferMoments m;
  m.trials = trials;
  const double nt = static_cast<double>(trials);
  for (std::size_t i = 0; i < 256; ++i) {
    CompensatedSum s;
    CompensatedSum s2;
    for (const auto& p : partial) {
      s.merge(p.sum[i]);
      s2.merge(p.sumsq[i]);
    }
    const double mean = s.value() / nt;
    const double var = trials > 1 ? std::max(0.0, (s2.value() - nt * mean * mean) / (nt - 1.0)) : 0.0;
    m.mean[i] = mean;
    m.standard_error[i] = std::sqrt(var / nt);
  }
  return m;
}

double fsim_commutation_deviation(std::uint64_t seed, std::uint64_t draws) {
  double worst = 0.0;
  for (std::uint64_t i = 0; i < draws; ++i) {
    CounterRng rng(derive_key(seed, i));
    const double pi = std::numbers::pi;
    const double t1 = rng.uniform(-pi, pi);
    const double t2 = rng.uniform(-pi, pi);
    const Mat4 f = build_fsim(rng.uniform(-pi, pi), rng.uniform(-pi, pi), rng.uniform(-pi, pi));
    const Mat4 lhs = linalg::mul(linalg::kron(linalg::rz(t1), linalg::rz(t2)), f);
    const Mat4 rhs = linalg::mul(f, linalg::kron(linalg::rz(t2), linalg::rz(t1)));
    worst = std::max(worst, linalg::max_abs_diff(lhs, rhs));
  }
  return worst;
}

std::array<EstimateReport, 16> dressed_pair_moments(Pauli p, Pauli q, std::uint64_t seed, std::uint64_t trials,
                                                    int workers) {
  if (p == q) throw ValidationError("pair moments need distinct Paulis");
  std::array<std::vector<double>, 16> values;
  for (auto& v : values) v.resize(static_cast<std::size_t>(trials));
  parallel_for(static_cast<std::size_t>(trials), workers, [&](std::size_t t) {
    CounterRng rng(derive_key(seed, t));
    const Mat2 u = sample_dressed_single_qubit(rng);
    std::array<double, 4> rp{};
    std::array<double, 4> rq{};
    for (int a = 0; a < 4; ++a) {
      rp[static_cast<std::size_t>(a)] = real_transfer(u, static_cast<Pauli>(a), p);
      rq[static_cast<std::size_t>(a)] = real_transfer(u, static_cast<Pauli>(a), q);
    }
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = 0; b < 4; ++b) values[a * 4 + b][t] = rp[a] * rq[b];
    }
  });
  std::array<EstimateReport, 16> out;
  for (std::size_t i = 0; i < 16; ++i) {
    std::string name = "dressed_";
    name += pauli_char(p);
    name += pauli_char(q);
    name += '_';
    name += pauli_char(static_cast<Pauli>(i / 4));
    name += pauli_char(static_cast<Pauli>(i % 4));
    out[i] = make_report(name, values[i], seed, 0.0);
  }
  return out;
}

}  // namespace ppath
