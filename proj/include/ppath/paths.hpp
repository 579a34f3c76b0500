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
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ppath/circuit.hpp"
#include "ppath/pauli.hpp"

namespace ppath {

/// Sequence (s_0, ..., s_d) of Pauli strings, one per time slice of `arch`.
/// Hamming weight and G(s), the number of gates whose input and output are
/// both non-identity, are computed once at construction.
class PauliPath {
 public:
  PauliPath(std::vector<PauliString> layers, const Architecture& arch);

  /// Layers separated by '|', e.g. "ZI|XY|IZ".
  static PauliPath parse(std::string_view text, const Architecture& arch);
  static PauliPath identity(const Architecture& arch);

  [[nodiscard]] const std::vector<PauliString>& layers() const { return layers_; }
  [[nodiscard]] const PauliString& layer(int i) const { return layers_[static_cast<std::size_t>(i)]; }
  [[nodiscard]] int depth() const { return static_cast<int>(layers_.size()) - 1; }
  [[nodiscard]] int n() const { return layers_.front().n(); }
  [[nodiscard]] int weight() const { return weight_; }
  [[nodiscard]] int gate_support_count() const { return active_gates_; }
  [[nodiscard]] std::string str() const;

  friend bool operator==(const PauliPath& a, const PauliPath& b) { return a.layers_ == b.layers_; }
  friend auto operator<=>(const PauliPath& a, const PauliPath& b) { return a.layers_ <=> b.layers_; }

 private:
  std::vector<PauliString> layers_;
  int weight_ = 0;
  int active_gates_ = 0;
};

/// Both conditions: every gate sees II->II or non-II->non-II, and the
/// boundary layers contain only I and Z. Throws DimensionError on shape mismatch.
bool is_legal(const PauliPath& s, const Architecture& arch);

struct WeightPartition {
  std::vector<int> w;
  int total = 0;
};

/// Compositions of k into d+1 positive parts, lexicographic; empty when k <= d.
void for_each_weight_partition(int k, int d, const std::function<void(const WeightPartition&)>& fn);
std::vector<WeightPartition> enumerate_weight_partitions(int k, int d);

/// Support masks (qubit_bit convention) of one legal path shape, before letters.
struct SupportPath {
  std::span<const std::uint64_t> masks;  ///< d+1 entries
  int weight = 0;
};

/// Disjoint slice of the enumeration: total weight k, one layer-weight
/// partition, and a lexicographic rank range of layer-t supports, where t is
/// the lightest layer (first on ties). k = 0 is the identity path alone.
struct PathTask {
  int k = 0;
  std::vector<int> partition;
  int t = 0;
  std::uint64_t config_begin = 0;
  std::uint64_t config_end = 0;
};

/// Tasks in stream order. Each task is cut to at most `max_configs_per_task`
/// layer-t supports. Their union is the whole stream.
std::vector<PathTask> split_path_tasks(const Architecture& arch, int ell, std::uint64_t max_configs_per_task = 4096);

/// Depth-first support enumeration of one task: fix layer t, then propagate
/// forwards to layer d and backwards to layer 0, each active gate choosing an
/// IR, RI or RR pattern and rejecting layers off their target weight.
void for_each_support(const Architecture& arch, const PathTask& task, const std::function<void(const SupportPath&)>& fn);
void for_each_support(const Architecture& arch, int ell, const std::function<void(const SupportPath&)>& fn);

/// Number of distinct letter assignments of a support: 3 per interior
/// non-identity, 1 on the boundary layers (Z only).
std::uint64_t letter_multiplicity(std::span<const std::uint64_t> masks);

/// Letter assignment over the support, boundary layers Z. `layers` is reused
/// between calls.
void for_each_letter_assignment(const Architecture& arch, const SupportPath& support,
                                const std::function<void(std::span<const PauliString>)>& fn);

/// Identity path first, then every legal path with d+1 <= |s| <= ell exactly once.
void for_each_legal_path(const Architecture& arch, int ell, const std::function<void(const PauliPath&)>& fn);
std::vector<PauliPath> enumerate_legal_paths(const Architecture& arch, int ell);

/// Exact weight -> count, omitting weights with no legal path.
std::map<int, std::uint64_t> count_legal_paths(const Architecture& arch, int ell);

/// Largest truncation that keeps every path: n (d + 1).
inline int full_weight(const Architecture& arch) { return arch.n() * (arch.depth() + 1); }

}  // namespace ppath
