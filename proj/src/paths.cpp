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

#include "ppath/paths.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "ppath/combinatorics.hpp"

namespace ppath {

namespace {

void check_shape(const std::vector<PauliString>& layers, const Architecture& arch) {
  if (static_cast<int>(layers.size()) != arch.depth() + 1) {
    throw DimensionError("path has " + std::to_string(layers.size()) + " layers, architecture needs " +
                         std::to_string(arch.depth() + 1));
  }
  for (const auto& s : layers) {
    if (s.n() != arch.n()) {
      throw DimensionError("path layer width " + std::to_string(s.n()) + " differs from " + std::to_string(arch.n()));
    }
  }
}

int min_layer_index(const std::vector<int>& w) {
  return static_cast<int>(std::min_element(w.begin(), w.end()) - w.begin());
}

std::uint64_t mask_of(int n, const std::vector<int>& qubits) {
  std::uint64_t m = 0;
  for (int q : qubits) m |= qubit_bit(n, q);
  return m;
}

// Depth-first support propagation for one task. `masks` is the explicit
// per-layer stack; each stage fills one layer from its already-fixed neighbour.
class SupportWalker {
 public:
  SupportWalker(const Architecture& arch, const PathTask& task, const std::function<void(const SupportPath&)>& fn)
      : arch_(arch), task_(task), fn_(fn), masks_(static_cast<std::size_t>(arch.depth() + 1), 0) {
    const int d = arch.depth();
    for (int l = task.t + 1; l <= d; ++l) stages_.push_back(l);
    for (int l = task.t - 1; l >= 0; --l) stages_.push_back(l);
    gate_bits_.resize(static_cast<std::size_t>(d));
    for (int l = 0; l < d; ++l) {
      for (const auto& p : arch.layer(l)) {
        gate_bits_[static_cast<std::size_t>(l)].push_back({qubit_bit(arch.n(), p.a), qubit_bit(arch.n(), p.b)});
      }
    }
  }

  void run() {
    const int n = arch_.n();
    const int wt = task_.partition[static_cast<std::size_t>(task_.t)];
    if (task_.config_begin >= task_.config_end) return;
    Combination c = Combination::unrank(n, wt, task_.config_begin);
    for (std::uint64_t r = task_.config_begin; r < task_.config_end; ++r) {
      masks_[static_cast<std::size_t>(task_.t)] = mask_of(n, c.indices());
      stage(0);
      c.next();
    }
  }

 private:
  struct Bits {
    std::uint64_t a;
    std::uint64_t b;
  };

  void stage(std::size_t i) {
    if (i == stages_.size()) {
      fn_(SupportPath{masks_, task_.k});
      return;
    }
    const int layer = stages_[i];
    const bool forward = layer > task_.t;
    // Gate layer between the known neighbour and `layer`.
    const int gate_layer = forward ? layer - 1 : layer;
    const std::uint64_t known = masks_[static_cast<std::size_t>(forward ? layer - 1 : layer + 1)];
    active_.clear();
    for (const auto& g : gate_bits_[static_cast<std::size_t>(gate_layer)]) {
      if ((known & (g.a | g.b)) != 0) active_.push_back(g);
    }
    const int target = task_.partition[static_cast<std::size_t>(layer)];
    const int count = static_cast<int>(active_.size());
    if (target < count || target > 2 * count) return;
    // The active set is consumed by the recursion below, so keep a copy per stage.
    std::vector<Bits> gates = active_;
    gate_choice(i, layer, gates, 0, 0, 0, target);
  }

  // Per active gate: IR (b only), RI (a only), RR.
  void gate_choice(std::size_t stage_index, int layer, const std::vector<Bits>& gates, std::size_t g,
                   std::uint64_t mask, int weight, int target) {
    const int left = static_cast<int>(gates.size() - g);
    if (weight + left > target || weight + 2 * left < target) return;
    if (g == gates.size()) {
      masks_[static_cast<std::size_t>(layer)] = mask;
      stage(stage_index + 1);
      return;
    }
    const Bits b = gates[g];
    gate_choice(stage_index, layer, gates, g + 1, mask | b.b, weight + 1, target);
    gate_choice(stage_index, layer, gates, g + 1, mask | b.a, weight + 1, target);
    gate_choice(stage_index, layer, gates, g + 1, mask | b.a | b.b, weight + 2, target);
  }

  const Architecture& arch_;
  const PathTask& task_;
  const std::function<void(const SupportPath&)>& fn_;
  std::vector<std::uint64_t> masks_;
  std::vector<int> stages_;
  std::vector<std::vector<Bits>> gate_bits_;
  std::vector<Bits> active_;
};

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) {
    throw std::overflow_error("path count exceeds 64 bits");
  }
  return a * b;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) throw std::overflow_error("path count exceeds 64 bits");
  return a + b;
}

}  // namespace

PauliPath::PauliPath(std::vector<PauliString> layers, const Architecture& arch) : layers_(std::move(layers)) {
  arch.require_valid();
  check_shape(layers_, arch);
  for (const auto& s : layers_) weight_ += s.weight();
  for (int l = 0; l < arch.depth(); ++l) {
    const std::uint64_t in = layers_[static_cast<std::size_t>(l)].support();
    const std::uint64_t out = layers_[static_cast<std::size_t>(l + 1)].support();
    for (int g = 0; g < arch.gates_per_layer(); ++g) {
      const std::uint64_t m = arch.pair_mask(l, g);
      if ((in & m) != 0 && (out & m) != 0) ++active_gates_;
    }
  }
}

PauliPath PauliPath::parse(std::string_view text, const Architecture& arch) {
  std::vector<PauliString> layers;
  std::size_t start = 0;
  while (true) {
    const std::size_t bar = text.find('|', start);
    layers.push_back(PauliString::parse(text.substr(start, bar == std::string_view::npos ? bar : bar - start)));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return PauliPath(std::move(layers), arch);
}

PauliPath PauliPath::identity(const Architecture& arch) {
  return PauliPath(std::vector<PauliString>(static_cast<std::size_t>(arch.depth() + 1), PauliString(arch.n())), arch);
}

std::string PauliPath::str() const {
  std::string out;
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    if (i > 0) out += '|';
    out += layers_[i].str();
  }
  return out;
}

bool is_legal(const PauliPath& s, const Architecture& arch) {
  arch.require_valid();
  check_shape(s.layers(), arch);
  if (!s.layers().front().is_diagonal() || !s.layers().back().is_diagonal()) return false;
  for (int l = 0; l < arch.depth(); ++l) {
    const std::uint64_t in = s.layer(l).support();
    const std::uint64_t out = s.layer(l + 1).support();
    for (int g = 0; g < arch.gates_per_layer(); ++g) {
      const std::uint64_t m = arch.pair_mask(l, g);
      if (((in & m) == 0) != ((out & m) == 0)) return false;
    }
  }
  return true;
}

void for_each_weight_partition(int k, int d, const std::function<void(const WeightPartition&)>& fn) {
  if (d < 0 || k <= d) return;
  WeightPartition p;
  p.total = k;
  for (CompositionIterator it(k, d + 1); !it.done(); it.next()) {
    p.w = it.value();
    fn(p);
  }
}

std::vector<WeightPartition> enumerate_weight_partitions(int k, int d) {
  std::vector<WeightPartition> out;
  for_each_weight_partition(k, d, [&](const WeightPartition& p) { out.push_back(p); });
  return out;
}

std::vector<PathTask> split_path_tasks(const Architecture& arch, int ell, std::uint64_t max_configs_per_task) {
  arch.require_valid();
  if (ell < 0) throw ValidationError("truncation weight must be nonnegative");
  if (max_configs_per_task == 0) max_configs_per_task = 1;
  const int n = arch.n();
  const int d = arch.depth();
  const int top = std::min(ell, full_weight(arch));
  std::vector<PathTask> tasks;
  tasks.push_back(PathTask{0, {}, 0, 0, 1});
  for (int k = d + 1; k <= top; ++k) {
    for_each_weight_partition(k, d, [&](const WeightPartition& p) {
      if (*std::max_element(p.w.begin(), p.w.end()) > n) return;
      const int t = min_layer_index(p.w);
      const std::uint64_t configs = binomial(n, p.w[static_cast<std::size_t>(t)]);
      for (std::uint64_t b = 0; b < configs; b += max_configs_per_task) {
        tasks.push_back(PathTask{k, p.w, t, b, std::min(configs, b + max_configs_per_task)});
      }
    });
  }
  return tasks;
}

void for_each_support(const Architecture& arch, const PathTask& task, const std::function<void(const SupportPath&)>& fn) {
  if (task.k == 0) {
    const std::vector<std::uint64_t> zeros(static_cast<std::size_t>(arch.depth() + 1), 0);
    fn(SupportPath{zeros, 0});
    return;
  }
  SupportWalker(arch, task, fn).run();
}

void for_each_support(const Architecture& arch, int ell, const std::function<void(const SupportPath&)>& fn) {
  for (const auto& task : split_path_tasks(arch, ell, std::numeric_limits<std::uint64_t>::max())) {
    for_each_support(arch, task, fn);
  }
}

std::uint64_t letter_multiplicity(std::span<const std::uint64_t> masks) {
  std::uint64_t m = 1;
  for (std::size_t l = 1; l + 1 < masks.size(); ++l) {
    for (int i = 0; i < std::popcount(masks[l]); ++i) m = checked_mul(m, 3);
  }
  return m;
}

void for_each_letter_assignment(const Architecture& arch, const SupportPath& support,
                                const std::function<void(std::span<const PauliString>)>& fn) {
  const int n = arch.n();
  const std::size_t layers = support.masks.size();
  std::vector<PauliString> s;
  s.reserve(layers);
  // Positions of interior non-identities, in layer then qubit order.
  std::vector<std::pair<std::size_t, int>> slots;
  for (std::size_t l = 0; l < layers; ++l) {
    const bool boundary = l == 0 || l + 1 == layers;
    s.push_back(boundary ? PauliString::z_on(n, support.masks[l]) : PauliString(n));
    if (boundary) continue;
    for (int q = 0; q < n; ++q) {
      if ((support.masks[l] & qubit_bit(n, q)) != 0) slots.emplace_back(l, q);
    }
  }
  std::vector<int> digit(slots.size(), 0);
  for (std::size_t i = 0; i < slots.size(); ++i) s[slots[i].first].set(slots[i].second, Pauli::X);
  while (true) {
    fn(s);
    // Odometer over {X, Y, Z}, last slot fastest.
    std::size_t i = slots.size();
    while (i > 0) {
      --i;
      if (digit[i] < 2) {
        ++digit[i];
        s[slots[i].first].set(slots[i].second, static_cast<Pauli>(1 + digit[i]));
        break;
      }
      digit[i] = 0;
      s[slots[i].first].set(slots[i].second, Pauli::X);
      if (i == 0) return;
    }
    if (slots.empty()) return;
  }
}

void for_each_legal_path(const Architecture& arch, int ell, const std::function<void(const PauliPath&)>& fn) {
  for_each_support(arch, ell, [&](const SupportPath& sp) {
    for_each_letter_assignment(arch, sp, [&](std::span<const PauliString> layers) {
      fn(PauliPath(std::vector<PauliString>(layers.begin(), layers.end()), arch));
    });
  });
}

std::vector<PauliPath> enumerate_legal_paths(const Architecture& arch, int ell) {
  std::vector<PauliPath> out;
  for_each_legal_path(arch, ell, [&](const PauliPath& p) { out.push_back(p); });
  return out;
}

std::map<int, std::uint64_t> count_legal_paths(const Architecture& arch, int ell) {
  std::map<int, std::uint64_t> counts;
  for_each_support(arch, ell, [&](const SupportPath& sp) {
    auto& c = counts[sp.weight];
    c = checked_add(c, letter_multiplicity(sp.masks));
  });
  return counts;
}

}  // namespace ppath
