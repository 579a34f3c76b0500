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

#include "ppath/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "ppath/kernels.hpp"
#include "ppath/parallel.hpp"
#include "ppath/summation.hpp"

namespace ppath {

namespace {

// Layer-t supports per task. Fixed so that the merge order, and therefore
// every rounding, is independent of the number of workers.
constexpr std::uint64_t kConfigsPerTask = 64;

void check_width(const Circuit& c, const Bitstring& x) {
  if (x.n != c.n()) {
    throw DimensionError("bitstring has " + std::to_string(x.n) + " bits, circuit has " + std::to_string(c.n()));
  }
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

// Sum over X/Y/Z letters on the interior layers of one support, boundary
// layers fixed to Z: a layer-by-layer contraction whose state at layer l is
// the letter assignment of that layer's support (3^{w_l} states).
class LetterContractor {
 public:
  explicit LetterContractor(const Circuit& c) : c_(c), n_(c.n()), d_(c.depth()) {}

  double contract(std::span<const std::uint64_t> masks) {
    const auto layers = static_cast<std::size_t>(d_ + 1);
    letters_.resize(layers);
    states_.resize(layers);
    for (std::size_t l = 0; l < layers; ++l) build_letters(l, masks[l], l == 0 || l + 1 == layers);

    cur_.assign(1, 1.0);
    for (int l = 0; l < d_; ++l) {
      const auto lu = static_cast<std::size_t>(l);
      gates_.clear();
      for (int g = 0; g < c_.architecture().gates_per_layer(); ++g) {
        if ((masks[lu] & c_.architecture().pair_mask(l, g)) == 0) continue;
        const GatePair& p = c_.architecture().layer(l)[static_cast<std::size_t>(g)];
        gates_.push_back({p.a, p.b, c_.table(l, g).entries().data()});
      }
      const std::size_t from = states_[lu];
      const std::size_t to = states_[lu + 1];
      next_.assign(to, 0.0);
      const std::uint8_t* in_letters = letters_[lu].data();
      const std::uint8_t* out_letters = letters_[lu + 1].data();
      for (std::size_t i = 0; i < from; ++i) {
        const double v = cur_[i];
        if (v == 0.0) continue;
        const std::uint8_t* li = in_letters + i * static_cast<std::size_t>(n_);
        for (std::size_t o = 0; o < to; ++o) {
          const std::uint8_t* lo = out_letters + o * static_cast<std::size_t>(n_);
          double prod = v;
          for (const auto& g : gates_) {
            const int pin = 4 * li[g.a] + li[g.b];
            const int pout = 4 * lo[g.a] + lo[g.b];
            prod *= g.table[pout * 16 + pin];
          }
          next_[o] += prod;
        }
      }
      std::swap(cur_, next_);
    }
    return cur_[0];
  }

 private:
  struct ActiveGate {
    int a;
    int b;
    const double* table;
  };

  void build_letters(std::size_t l, std::uint64_t mask, bool boundary) {
    std::vector<int> support;
    for (int q = 0; q < n_; ++q) {
      if ((mask & qubit_bit(n_, q)) != 0) support.push_back(q);
    }
    std::size_t count = 1;
    if (!boundary) {
      for (std::size_t i = 0; i < support.size(); ++i) count *= 3;
    }
    states_[l] = count;
    auto& out = letters_[l];
    out.assign(count * static_cast<std::size_t>(n_), 0);
    for (std::size_t s = 0; s < count; ++s) {
      std::uint8_t* row = out.data() + s * static_cast<std::size_t>(n_);
      std::size_t rest = s;
      // Last support qubit varies fastest.
      for (std::size_t i = support.size(); i-- > 0;) {
        std::uint8_t letter = static_cast<std::uint8_t>(Pauli::Z);
        if (!boundary) {
          letter = static_cast<std::uint8_t>(1 + rest % 3);
          rest /= 3;
        }
        row[support[i]] = letter;
      }
    }
  }

  const Circuit& c_;
  int n_;
  int d_;
  std::vector<std::vector<std::uint8_t>> letters_;
  std::vector<std::size_t> states_;
  std::vector<ActiveGate> gates_;
  std::vector<double> cur_;
  std::vector<double> next_;
};

struct TaskResult {
  std::vector<std::pair<std::uint64_t, CompensatedSum>> terms;
  std::uint64_t paths = 0;
};

}  // namespace

double path_coefficient(const Circuit& c, const PauliPath& s, const Bitstring& x) {
  check_width(c, x);
  if (s.depth() != c.depth() || s.n() != c.n()) throw DimensionError("path shape does not match circuit");
  const double boundary = boundary_overlap(x, s.layers().back()) * boundary_overlap(Bitstring::zeros(c.n()), s.layer(0));
  if (boundary == 0.0) return 0.0;
  double prod = boundary;
  const Architecture& arch = c.architecture();
  for (int l = 0; l < c.depth(); ++l) {
    const PauliString& in = s.layer(l);
    const PauliString& out = s.layer(l + 1);
    for (int g = 0; g < arch.gates_per_layer(); ++g) {
      const GatePair& p = arch.layer(l)[static_cast<std::size_t>(g)];
      const int pin = pauli2_index(in.get(p.a), in.get(p.b));
      const int pout = pauli2_index(out.get(p.a), out.get(p.b));
      if (pin == 0 && pout == 0) continue;
      prod *= c.table(l, g)(pout, pin);
    }
  }
  return prod;
}

int noisy_weight(const PauliPath& s, const NoiseModel& noise) {
  return noise.noise_before_first_layer ? s.weight() : s.weight() - s.layer(0).weight();
}

double noisy_path_coefficient(const Circuit& c, const PauliPath& s, const Bitstring& x, const NoiseModel& noise) {
  noise.validate();
  return std::pow(1.0 - noise.gamma, noisy_weight(s, noise)) * path_coefficient(c, s, x);
}

double quasi_prob_by_paths(const Circuit& c, const NoiseModel& noise, int ell, const Bitstring& x) {
  check_width(c, x);
  noise.validate();
  CompensatedSum sum;
  for_each_legal_path(c.architecture(), ell,
                      [&](const PauliPath& s) { sum.add(noisy_path_coefficient(c, s, x, noise)); });
  return sum.value();
}

Marginal Marginal::prefix(int n, int prefix_len, std::uint64_t prefix) {
  check_qubit_count(n);
  if (prefix_len < 0 || prefix_len > n) throw ValidationError("prefix length out of range");
  const std::uint64_t traced = full_mask(n - prefix_len);
  const std::uint64_t fixed = full_mask(n) & ~traced;
  return Marginal{n, fixed, prefix & fixed, traced};
}

void Marginal::validate() const {
  check_qubit_count(n);
  if ((fixed_mask & traced_mask) != 0) throw ValidationError("fixed and traced qubit sets overlap");
  if ((fixed_mask | traced_mask) != full_mask(n)) throw ValidationError("fixed and traced sets must cover every qubit");
  if ((fixed_values & ~fixed_mask) != 0) throw ValidationError("fixed values set outside the fixed qubits");
}

QuasiProbEvaluator::QuasiProbEvaluator(Circuit circuit, NoiseModel noise, int ell, int workers)
    : circuit_(std::move(circuit)), noise_(noise), ell_(ell) {
  noise_.validate();
  if (ell < 0) throw ValidationError("truncation weight must be nonnegative");
  const Architecture& arch = circuit_.architecture();
  arch.require_valid();
  const auto tasks = split_path_tasks(arch, ell, kConfigsPerTask);
  std::vector<TaskResult> results(tasks.size());
  const double scale = std::ldexp(1.0, -circuit_.n());
  const double keep = 1.0 - noise_.gamma;

  parallel_for(tasks.size(), workers, [&](std::size_t i) {
    LetterContractor contractor(circuit_);
    std::unordered_map<std::uint64_t, CompensatedSum> acc;
    std::vector<std::uint64_t> order;
    TaskResult& r = results[i];
    for_each_support(arch, tasks[i], [&](const SupportPath& sp) {
      const int exposed = noise_.noise_before_first_layer ? sp.weight : sp.weight - std::popcount(sp.masks[0]);
      const double factor = std::pow(keep, exposed);
      r.paths = saturating_add(r.paths, letter_multiplicity(sp.masks));
      if (factor == 0.0) return;
      const double value = factor * scale * contractor.contract(sp.masks);
      const std::uint64_t z = sp.masks.back();
      auto [it, fresh] = acc.try_emplace(z);
      if (fresh) order.push_back(z);
      it->second.add(value);
    });
    r.terms.reserve(order.size());
    for (std::uint64_t z : order) r.terms.emplace_back(z, acc[z]);
  });

  std::map<std::uint64_t, CompensatedSum> merged;
  for (const auto& r : results) {
    paths_ = saturating_add(paths_, r.paths);
    for (const auto& [z, s] : r.terms) merged[z].merge(s);
  }
  spectrum_.reserve(merged.size());
  for (const auto& [z, s] : merged) spectrum_.emplace_back(z, s.value());
}

double QuasiProbEvaluator::quasi_prob(const Bitstring& x) const {
  check_width(circuit_, x);
  CompensatedSum sum;
  for (const auto& [z, b] : spectrum_) sum.add(parity(z & x.value) ? -b : b);
  return sum.value();
}

double QuasiProbEvaluator::quasi_prob_marginal(const Marginal& m) const {
  m.validate();
  if (m.n != n()) throw DimensionError("marginal width does not match circuit");
  CompensatedSum sum;
  for (const auto& [z, b] : spectrum_) {
    if ((z & m.traced_mask) != 0) continue;
    sum.add(parity(z & m.fixed_values) ? -b : b);
  }
  return std::ldexp(sum.value(), std::popcount(m.traced_mask));
}

std::vector<double> QuasiProbEvaluator::quasi_prob_all() const {
  if (n() > 26) throw SizeCapError("dense quasi-probability output limited to 26 qubits");
  std::vector<double> dense(std::size_t{1} << n(), 0.0);
  for (const auto& [z, b] : spectrum_) dense[z] = b;
  kernels::active_kernels().walsh_hadamard(dense.data(), dense.size());
  return dense;
}

int choose_truncation(double epsilon, double delta, double gamma, double c_margin, int depth) {
  if (gamma == 0.0) throw ValidationError("truncation needs gamma > 0: noiseless circuits have no guarantee");
  if (!(gamma > 0.0 && gamma <= 1.0)) throw ValidationError("gamma must lie in (0, 1]");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw ValidationError("epsilon must lie in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0)) throw ValidationError("delta must lie in (0, 1)");
  if (!(c_margin > 0.0)) throw ValidationError("c_margin must be positive");
  if (depth < 1) throw ValidationError("depth must be at least 1");
  const double raw = std::ceil(std::log(c_margin / (epsilon * std::sqrt(delta))) / gamma);
  const double floor = depth + 1;
  if (raw > static_cast<double>(std::numeric_limits<int>::max())) throw ValidationError("truncation weight overflows");
  return static_cast<int>(std::max(raw, floor));
}

double Sampler::marginal(int len, std::uint64_t prefix) {
  ++calls_;
  auto& memo = memo_[static_cast<std::size_t>(len)];
  if (auto it = memo.find(prefix); it != memo.end()) return it->second;
  const double m = ev_->quasi_prob_marginal(Marginal::prefix(ev_->n(), len, prefix));
  memo.emplace(prefix, m);
  return m;
}

Bitstring Sampler::draw(CounterRng& rng) {
  const int n = ev_->n();
  std::uint64_t prefix = 0;
  for (int q = 0; q < n; ++q) {
    const std::uint64_t one = qubit_bit(n, q);
    const double m0 = std::max(marginal(q + 1, prefix), 0.0);
    const double m1 = std::max(marginal(q + 1, prefix | one), 0.0);
    const double total = m0 + m1;
    const bool bit = total > 0.0 ? rng.uniform() * total < m1 : rng.uniform() < 0.5;
    if (bit) prefix |= one;
  }
  return Bitstring(n, prefix);
}

Bitstring sample(const QuasiProbEvaluator& ev, CounterRng& rng) {
  Sampler s(ev);
  return s.draw(rng);
}

std::vector<Bitstring> sample_many(const QuasiProbEvaluator& ev, std::uint64_t seed, std::size_t count, int workers) {
  std::vector<Bitstring> out(count);
  constexpr std::size_t kBlock = 1024;
  const std::size_t blocks = (count + kBlock - 1) / kBlock;
  parallel_for(blocks, workers, [&](std::size_t b) {
    Sampler s(ev);
    const std::size_t end = std::min(count, (b + 1) * kBlock);
    for (std::size_t i = b * kBlock; i < end; ++i) {
      CounterRng rng(derive_key(seed, i));
      out[i] = s.draw(rng);
    }
  });
  return out;
}

}  // namespace ppath
