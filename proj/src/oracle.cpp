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

#include "ppath/oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "ppath/kernels.hpp"
#include "ppath/summation.hpp"

namespace ppath {

namespace {

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  const long parsed = std::strtol(v, &end, 10);
  if (*end != '\0' || parsed < 1 || parsed > kMaxQubits) {
    throw ConfigError(std::string(name) + " must be an integer in [1, 64]");
  }
  return static_cast<int>(parsed);
}

void require_cap(int n, int cap, const char* what) {
  if (n > cap) {
    throw SizeCapError(std::string(what) + " limited to " + std::to_string(cap) + " qubits, circuit has " +
                       std::to_string(n));
  }
}

std::size_t pauli_dim(int n) { return std::size_t{1} << (2 * n); }

// Kernel index of the diagonal string with Z on mask z.
std::size_t diagonal_index(int n, std::uint64_t z) {
  std::size_t idx = 0;
  for (int q = 0; q < n; ++q) {
    idx = idx * 4 + ((z & qubit_bit(n, q)) != 0 ? 3 : 0);
  }
  return idx;
}

std::vector<std::size_t> diagonal_indices(int n) {
  std::vector<std::size_t> out(std::size_t{1} << n);
  for (std::uint64_t z = 0; z < out.size(); ++z) out[z] = diagonal_index(n, z);
  return out;
}

// p(x) = sum_z alpha_{Z^z} 2^{-n/2} (-1)^{|z & x|}
std::vector<double> readout(int n, const double* coeffs, const std::vector<std::size_t>& diag) {
  std::vector<double> p(diag.size());
  const double scale = std::ldexp(1.0, -n) * std::sqrt(std::ldexp(1.0, n));  // 2^{-n/2}
  for (std::size_t z = 0; z < diag.size(); ++z) p[z] = coeffs[diag[z]] * scale;
  kernels::active_kernels().walsh_hadamard(p.data(), p.size());
  return p;
}

void apply_gate_layer(const Circuit& c, int l, double* coeffs) {
  const auto& k = kernels::active_kernels();
  const auto& layer = c.architecture().layer(l);
  for (std::size_t g = 0; g < layer.size(); ++g) {
    k.apply_transfer(coeffs, c.n(), layer[g].a, layer[g].b, c.table(l, static_cast<int>(g)).entries().data());
  }
}

std::vector<double> initial_coefficients(int n) {
  std::vector<double> v(pauli_dim(n), 0.0);
  const double a = 1.0 / std::sqrt(std::ldexp(1.0, n));
  for (std::uint64_t z = 0; z < (std::uint64_t{1} << n); ++z) v[diagonal_index(n, z)] = a;
  return v;
}

std::vector<std::uint8_t> string_weights(int n) {
  std::vector<std::uint8_t> w(pauli_dim(n), 0);
  for (std::size_t i = 1; i < w.size(); ++i) w[i] = static_cast<std::uint8_t>(w[i / 4] + (i % 4 != 0 ? 1 : 0));
  return w;
}

// Sum of f over the gate layers, with the boundary overlaps applied by the caller.
class LegalPathWalker {
 public:
  LegalPathWalker(const Circuit& c, const Bitstring& x) : c_(c), x_(x), n_(c.n()), d_(c.depth()) {
    layers_.assign(static_cast<std::size_t>(d_ + 1), PauliString(n_));
  }

  double run() {
    for (std::uint64_t z0 = 0; z0 < (std::uint64_t{1} << n_); ++z0) {
      layers_[0] = PauliString::z_on(n_, z0);
      gate(0, 0, 1.0);
    }
    return sum_.value();
  }

 private:
  void gate(int l, int g, double prod) {
    if (prod == 0.0) return;
    const Architecture& arch = c_.architecture();
    if (g == arch.gates_per_layer()) {
      if (l + 1 == d_) {
        const double b = boundary_overlap(x_, layers_.back()) *
                         boundary_overlap(Bitstring::zeros(n_), layers_.front());
        sum_.add(prod * b);
        return;
      }
      gate(l + 1, 0, prod);
      return;
    }
    const GatePair& p = arch.layer(l)[static_cast<std::size_t>(g)];
    const PauliString& in = layers_[static_cast<std::size_t>(l)];
    PauliString& out = layers_[static_cast<std::size_t>(l + 1)];
    const int pin = pauli2_index(in.get(p.a), in.get(p.b));
    if (pin == 0) {
      out.set(p.a, Pauli::I);
      out.set(p.b, Pauli::I);
      gate(l, g + 1, prod);
      return;
    }
    const bool last = l + 1 == d_;
    for (int pout = 1; pout < 16; ++pout) {
      const auto a = static_cast<Pauli>(pout / 4);
      const auto b = static_cast<Pauli>(pout % 4);
      if (last && ((a != Pauli::I && a != Pauli::Z) || (b != Pauli::I && b != Pauli::Z))) continue;
      out.set(p.a, a);
      out.set(p.b, b);
      gate(l, g + 1, prod * c_.table(l, g)(pout, pin));
    }
  }

  const Circuit& c_;
  const Bitstring& x_;
  int n_;
  int d_;
  std::vector<PauliString> layers_;
  CompensatedSum sum_;
};

double all_paths_sum(const Circuit& c, const Bitstring& x) {
  const int n = c.n();
  const int d = c.depth();
  const int digits = n * (d + 1);
  const Architecture& arch = c.architecture();
  std::vector<PauliString> layers(static_cast<std::size_t>(d + 1), PauliString(n));
  CompensatedSum sum;
  const std::uint64_t total = std::uint64_t{1} << (2 * digits);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (int l = 0; l <= d; ++l) {
      for (int q = 0; q < n; ++q) {
        layers[static_cast<std::size_t>(l)].set(q, static_cast<Pauli>(rest & 3));
        rest >>= 2;
      }
    }
    double prod = boundary_overlap(x, layers.back()) * boundary_overlap(Bitstring::zeros(n), layers.front());
    for (int l = 0; l < d && prod != 0.0; ++l) {
      const auto& in = layers[static_cast<std::size_t>(l)];
      const auto& out = layers[static_cast<std::size_t>(l + 1)];
      for (int g = 0; g < arch.gates_per_layer(); ++g) {
        const GatePair& p = arch.layer(l)[static_cast<std::size_t>(g)];
        // Full table lookup, including II -> II, so nothing is assumed about legality.
        prod *= c.table(l, g)(pauli2_index(out.get(p.a), out.get(p.b)), pauli2_index(in.get(p.a), in.get(p.b)));
      }
    }
    sum.add(prod);
  }
  return sum.value();
}

}  // namespace

OracleLimits OracleLimits::from_env() {
  OracleLimits l;
  l.max_statevector_qubits = env_int("PPATH_MAX_STATEVECTOR_QUBITS", l.max_statevector_qubits);
  l.max_pauli_qubits = env_int("PPATH_MAX_PAULI_QUBITS", l.max_pauli_qubits);
  return l;
}

std::vector<std::complex<double>> statevector(const Circuit& c, const OracleLimits& limits) {
  require_cap(c.n(), limits.max_statevector_qubits, "statevector oracle");
  const int n = c.n();
  std::vector<std::complex<double>> psi(std::size_t{1} << n, 0.0);
  psi[0] = 1.0;
  const auto& k = kernels::active_kernels();
  for (int l = 0; l < c.depth(); ++l) {
    const auto& layer = c.architecture().layer(l);
    for (std::size_t g = 0; g < layer.size(); ++g) {
      k.apply_gate(psi.data(), n, layer[g].a, layer[g].b, c.gate(l, static_cast<int>(g)).data());
    }
  }
  return psi;
}

std::vector<double> ideal_distribution(const Circuit& c, const OracleLimits& limits) {
  const auto psi = statevector(c, limits);
  std::vector<double> p(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) p[i] = std::norm(psi[i]);
  return p;
}

std::vector<double> pauli_coefficients(const Circuit& c, const NoiseModel& noise, const OracleLimits& limits) {
  noise.validate();
  require_cap(c.n(), limits.max_pauli_qubits, "Pauli propagation oracle");
  const int n = c.n();
  const double keep = 1.0 - noise.gamma;
  const auto& k = kernels::active_kernels();
  std::vector<double> v = initial_coefficients(n);
  if (noise.noise_before_first_layer) k.depolarize(v.data(), n, keep);
  for (int l = 0; l < c.depth(); ++l) {
    apply_gate_layer(c, l, v.data());
    k.depolarize(v.data(), n, keep);
  }
  return v;
}

std::vector<double> noisy_distribution(const Circuit& c, const NoiseModel& noise, const OracleLimits& limits) {
  const auto v = pauli_coefficients(c, noise, limits);
  auto p = readout(c.n(), v.data(), diagonal_indices(c.n()));
  CompensatedSum total;
  for (double& x : p) {
    if (x < -1e-12) throw NumericalError("noisy probability " + std::to_string(x) + " below -1e-12");
    if (x < 0.0) x = 0.0;
    total.add(x);
  }
  const double t = total.value();
  if (std::abs(t - 1.0) > 1e-10) throw NumericalError("noisy distribution sums to " + std::to_string(t));
  for (double& x : p) x /= t;
  return p;
}

std::vector<std::vector<double>> graded_truncated_distributions(const Circuit& c, const NoiseModel& noise,
                                                                const OracleLimits& limits) {
  noise.validate();
  require_cap(c.n(), limits.max_pauli_qubits, "Pauli propagation oracle");
  const int n = c.n();
  const int d = c.depth();
  const int top = n * (d + 1);
  const std::size_t dim = pauli_dim(n);
  const double keep = 1.0 - noise.gamma;
  const auto weights = string_weights(n);
  const auto diag = diagonal_indices(n);

  // buckets[w] holds the partial sums over path prefixes of total weight w.
  std::vector<std::vector<double>> buckets(static_cast<std::size_t>(top + 1), std::vector<double>(dim, 0.0));
  {
    const auto init = initial_coefficients(n);
    for (std::size_t i = 0; i < dim; ++i) {
      if (init[i] == 0.0) continue;
      const double f = noise.noise_before_first_layer ? std::pow(keep, weights[i]) : 1.0;
      buckets[weights[i]][i] = init[i] * f;
    }
  }
  std::vector<double> keep_pow(static_cast<std::size_t>(n + 1));
  for (int w = 0; w <= n; ++w) keep_pow[static_cast<std::size_t>(w)] = std::pow(keep, w);

  std::vector<std::vector<double>> next(buckets.size(), std::vector<double>(dim, 0.0));
  for (int l = 0; l < d; ++l) {
    const int reach = n * (l + 1);  // highest occupied weight before this layer
    for (int w = 0; w <= reach; ++w) apply_gate_layer(c, l, buckets[static_cast<std::size_t>(w)].data());
    for (auto& b : next) std::fill(b.begin(), b.end(), 0.0);
    for (int w = 0; w <= reach; ++w) {
      const auto& src = buckets[static_cast<std::size_t>(w)];
      for (std::size_t i = 0; i < dim; ++i) {
        const double v = src[i];
        if (v == 0.0) continue;
        next[static_cast<std::size_t>(w + weights[i])][i] += v * keep_pow[weights[i]];
      }
    }
    std::swap(buckets, next);
  }

  std::vector<std::vector<double>> out;
  out.reserve(buckets.size());
  std::vector<double> running(std::size_t{1} << n, 0.0);
  for (int w = 0; w <= top; ++w) {
    const auto p = readout(n, buckets[static_cast<std::size_t>(w)].data(), diag);
    for (std::size_t x = 0; x < p.size(); ++x) running[x] += p[x];
    out.push_back(running);
  }
  return out;
}

double brute_force_path_sum(const Circuit& c, const Bitstring& x, PathSumMode mode) {
  if (x.n != c.n()) throw DimensionError("bitstring width does not match circuit");
  if (mode == PathSumMode::AllPaths) {
    if (c.n() * (c.depth() + 1) > 8) throw SizeCapError("all-paths sum needs n (d + 1) <= 8");
    return all_paths_sum(c, x);
  }
  if (c.n() > 6 || c.depth() > 4) throw SizeCapError("legal-only path sum needs n <= 6 and d <= 4");
  return LegalPathWalker(c, x).run();
}

double l1_distance(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw DimensionError("distributions have lengths " + std::to_string(p.size()) + " and " + std::to_string(q.size()));
  }
  CompensatedSum s;
  for (std::size_t i = 0; i < p.size(); ++i) s.add(std::abs(p[i] - q[i]));
  return s.value();
}

double tvd(std::span<const double> p, std::span<const double> q) { return 0.5 * l1_distance(p, q); }

}  // namespace ppath
