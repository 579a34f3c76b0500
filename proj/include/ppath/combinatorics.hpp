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
#include <vector>

namespace ppath {

/// binom(n, k) in 64 bits; throws std::overflow_error past 2^64.
std::uint64_t binomial(int n, int k);

/// k-subsets of {0, ..., n-1} as ascending index vectors, in lexicographic order.
class Combination {
 public:
  Combination(int n, int k);
  /// The subset of lexicographic rank `rank` (0-based).
  static Combination unrank(int n, int k, std::uint64_t rank);

  [[nodiscard]] const std::vector<int>& indices() const { return idx_; }
  /// Advance to the next subset; false when the sequence is exhausted.
  bool next();

 private:
  int n_;
  int k_;
  std::vector<int> idx_;
};

/// Compositions of `total` into `parts` positive integers, lexicographic.
/// Equivalent to the (parts-1)-subsets of cut points in {1, ..., total-1}.
class CompositionIterator {
 public:
  CompositionIterator(int total, int parts);

  [[nodiscard]] bool done() const { return done_; }
  [[nodiscard]] const std::vector<int>& value() const { return parts_; }
  void next();

 private:
  void load();

  int total_;
  Combination cuts_;
  std::vector<int> parts_;
  bool done_ = false;
};

}  // namespace ppath
