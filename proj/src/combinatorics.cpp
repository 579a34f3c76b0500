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

#include "ppath/combinatorics.hpp"

#include <stdexcept>

namespace ppath {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  __extension__ typedef unsigned __int128 u128;
  u128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > UINT64_MAX) throw std::overflow_error("binomial coefficient exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

Combination::Combination(int n, int k) : n_(n), k_(k), idx_(static_cast<std::size_t>(k < 0 ? 0 : k)) {
  if (k < 0 || k > n) throw std::invalid_argument("combination size out of range");
  for (int i = 0; i < k; ++i) idx_[static_cast<std::size_t>(i)] = i;
}

Combination Combination::unrank(int n, int k, std::uint64_t rank) {
  if (rank >= binomial(n, k)) throw std::out_of_range("combination rank out of range");
  Combination c(n, k);
  int x = 0;
  for (int j = 0; j < k; ++j) {
    // Count subsets whose j-th element is x: the rest come from {x+1, ..., n-1}.
    for (;; ++x) {
      const std::uint64_t with_x = binomial(n - x - 1, k - j - 1);
      if (rank < with_x) break;
      rank -= with_x;
    }
    c.idx_[static_cast<std::size_t>(j)] = x++;
  }
  return c;
}

bool Combination::next() {
  int i = k_ - 1;
  while (i >= 0 && idx_[static_cast<std::size_t>(i)] == n_ - k_ + i) --i;
  if (i < 0) return false;
  ++idx_[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k_; ++j) idx_[static_cast<std::size_t>(j)] = idx_[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

CompositionIterator::CompositionIterator(int total, int parts)
    : total_(total),
      cuts_(total >= parts && parts >= 1 ? total - 1 : 0, total >= parts && parts >= 1 ? parts - 1 : 0),
      parts_(static_cast<std::size_t>(parts > 0 ? parts : 0)) {
  done_ = parts < 1 || total < parts;
  if (!done_) load();
}

void CompositionIterator::load() {
  int prev = 0;
  const auto& cut = cuts_.indices();
  for (std::size_t i = 0; i < cut.size(); ++i) {
    const int c = cut[i] + 1;  // cut points live in 1..total-1
    parts_[i] = c - prev;
    prev = c;
  }
  parts_.back() = total_ - prev;
}

void CompositionIterator::next() {
  if (done_) return;
  if (!cuts_.next()) {
    done_ = true;
    return;
  }
  load();
}

}  // namespace ppath
