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

#include <doctest.h>

#include <algorithm>
#include <set>
#include <unordered_set>

#include "ppath/combinatorics.hpp"
#include "brute_force.hpp"
#include "ppath/paths.hpp"

using namespace ppath;
using ppath::testing::brute_force_legal;
using ppath::testing::pow_int;

namespace {

std::set<std::string> enumerated(const Architecture& arch, int ell) {
  std::set<std::string> out;
  std::size_t emitted = 0;
  for_each_legal_path(arch, ell, [&](const PauliPath& p) {
    out.insert(p.str());
    ++emitted;
  });
  CHECK(emitted == out.size());  // no duplicates
  return out;
}

}  // namespace

TEST_CASE("legality examples") {
  const auto arch = Architecture::brickwork(2, 1);
  CHECK(is_legal(PauliPath::identity(arch), arch));
  CHECK_FALSE(is_legal(PauliPath::parse("ZI|II", arch), arch));
  CHECK_FALSE(is_legal(PauliPath::parse("XI|XI", arch), arch));
  CHECK(is_legal(PauliPath::parse("ZI|IZ", arch), arch));
  const auto arch2 = Architecture::brickwork(2, 2);
  CHECK(is_legal(PauliPath::parse("ZI|XY|IZ", arch2), arch2));
  CHECK_THROWS_AS(is_legal(PauliPath::parse("ZI|IZ", arch), arch2), DimensionError);
}

TEST_CASE("path caches weight and gate support") {
  const auto arch = Architecture::brickwork(4, 2);
  const auto p = PauliPath::parse("ZIII|XYII|IZZI", arch);
  CHECK(p.weight() == 5);
  CHECK(p.gate_support_count() == 2);  // (0,1) in layer 0 and (1,2) in layer 1
  CHECK(p.str() == "ZIII|XYII|IZZI");
  CHECK(PauliPath::identity(arch).weight() == 0);
  CHECK_THROWS(PauliPath::parse("ZIII|XYII", arch));
}

TEST_CASE("weight partitions") {
  const auto p = enumerate_weight_partitions(4, 3);
  REQUIRE(p.size() == 1);
  CHECK(p[0].w == std::vector<int>{1, 1, 1, 1});
  const auto q = enumerate_weight_partitions(3, 1);
  REQUIRE(q.size() == 2);
  CHECK(q[0].w == std::vector<int>{1, 2});
  CHECK(q[1].w == std::vector<int>{2, 1});
  CHECK(enumerate_weight_partitions(6, 2).size() == 10);
  CHECK(enumerate_weight_partitions(3, 3).empty());
  CHECK(enumerate_weight_partitions(2, 3).empty());
  for (int k = 1; k <= 12; ++k) {
    for (int d = 0; d <= 5; ++d) {
      const auto all = enumerate_weight_partitions(k, d);
      CHECK(all.size() == (k <= d ? 0 : binomial(k - 1, d)));
      for (const auto& w : all) {
        CHECK(w.total == k);
        CHECK(std::all_of(w.w.begin(), w.w.end(), [](int x) { return x >= 1; }));
      }
      CHECK(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.w < b.w; }));
    }
  }
}

TEST_CASE("smallest enumeration n=2 d=1") {
  const auto arch = Architecture::brickwork(2, 1);
  const auto paths = enumerate_legal_paths(arch, 2);
  REQUIRE(paths.size() == 5);
  CHECK(paths.front() == PauliPath::identity(arch));
  const std::set<std::string> want{"II|II", "ZI|ZI", "ZI|IZ", "IZ|ZI", "IZ|IZ"};
  std::set<std::string> got;
  for (const auto& p : paths) got.insert(p.str());
  CHECK(got == want);
  CHECK(got == brute_force_legal(arch, 2));
}

TEST_CASE("enumeration equals the brute-force filter") {
  for (const auto& [n, d] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{2, 3}, std::pair{4, 1}, std::pair{4, 2}}) {
    const auto arch = Architecture::brickwork(n, d);
    const int top = full_weight(arch);
    const auto brute = brute_force_legal(arch, top);
    INFO("n=" << n << " d=" << d);
    CHECK(enumerated(arch, top) == brute);
    // Truncated stream is the weight filter of the full one.
    const int ell = d + 2;
    std::set<std::string> cut;
    for (const auto& s : brute) {
      if (static_cast<int>(std::count_if(s.begin(), s.end(), [](char c) { return c != 'I' && c != '|'; })) <= ell) {
        cut.insert(s);
      }
    }
    CHECK(enumerated(arch, ell) == cut);
  }
}

TEST_CASE("emitted paths are legal, within weight and start at d+1") {
  const auto arch = Architecture::brickwork(6, 3);
  int min_weight = 1 << 20;
  std::size_t count = 0;
  for_each_legal_path(arch, 7, [&](const PauliPath& p) {
    ++count;
    CHECK(is_legal(p, arch));
    CHECK(p.weight() <= 7);
    if (p.weight() > 0) {
      min_weight = std::min(min_weight, p.weight());
      CHECK(4 * p.gate_support_count() >= p.weight());
      CHECK(p.gate_support_count() <= p.weight());
    }
  });
  CHECK(min_weight == 4);
  CHECK(count > 1);
}

TEST_CASE("weight d+1 counts follow n 2^d 3^(d-1)") {
  for (const auto& [n, d] : {std::pair{2, 1}, std::pair{4, 2}, std::pair{4, 3}, std::pair{6, 3}, std::pair{8, 4},
                             std::pair{10, 2}}) {
    const auto arch = Architecture::brickwork(n, d);
    const auto counts = count_legal_paths(arch, d + 1);
    const std::uint64_t want = static_cast<std::uint64_t>(n) * pow_int(2, d) * pow_int(3, d - 1);
    INFO("n=" << n << " d=" << d);
    REQUIRE(counts.count(d + 1) == 1);
    CHECK(counts.at(d + 1) == want);
    CHECK(counts.at(0) == 1);
    for (int k = 1; k <= d; ++k) CHECK(counts.count(k) == 0);
  }
}

TEST_CASE("count map agrees with explicit enumeration and is monotone in ell") {
  const auto arch = Architecture::brickwork(4, 2);
  const int top = full_weight(arch);
  std::map<int, std::uint64_t> by_hand;
  for_each_legal_path(arch, top, [&](const PauliPath& p) { ++by_hand[p.weight()]; });
  CHECK(count_legal_paths(arch, top) == by_hand);
  std::uint64_t prev = 0;
  for (int ell = 0; ell <= top; ++ell) {
    std::uint64_t total = 0;
    for (const auto& [w, c] : count_legal_paths(arch, ell)) {
      CHECK(w <= ell);
      CHECK(c > 0);
      total += c;
    }
    CHECK(total >= prev);
    prev = total;
  }
}

TEST_CASE("task split partitions the support stream") {
  const auto arch = Architecture::brickwork(6, 3);
  const int ell = 10;
  std::vector<std::vector<std::uint64_t>> whole;
  for_each_support(arch, ell, [&](const SupportPath& s) { whole.emplace_back(s.masks.begin(), s.masks.end()); });
  for (const std::uint64_t chunk : {1ULL, 3ULL, 4096ULL}) {
    const auto tasks = split_path_tasks(arch, ell, chunk);
    std::vector<std::vector<std::uint64_t>> parts;
    for (const auto& t : tasks) {
      CHECK(t.config_end > t.config_begin);
      CHECK(t.config_end - t.config_begin <= chunk);
      for_each_support(arch, t, [&](const SupportPath& s) { parts.emplace_back(s.masks.begin(), s.masks.end()); });
    }
    CHECK(parts == whole);
  }
  CHECK(split_path_tasks(arch, ell).front().k == 0);
  std::set<std::vector<std::uint64_t>> unique(whole.begin(), whole.end());
  CHECK(unique.size() == whole.size());
}

TEST_CASE("letter multiplicity counts interior cells only") {
  const auto arch = Architecture::brickwork(4, 2);
  std::uint64_t support_total = 0;
  for_each_support(arch, full_weight(arch), [&](const SupportPath& s) {
    std::uint64_t letters = 0;
    for_each_letter_assignment(arch, s, [&](std::span<const PauliString> layers) {
      CHECK(layers.front().is_diagonal());
      CHECK(layers.back().is_diagonal());
      ++letters;
    });
    CHECK(letters == letter_multiplicity(s.masks));
    support_total += letters;
  });
  std::uint64_t counted = 0;
  for (const auto& [w, c] : count_legal_paths(arch, full_weight(arch))) counted += c;
  CHECK(support_total == counted);
}

TEST_CASE("combinatorics helpers") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(64, 32) == 1832624140942590534ULL);
  CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);
  Combination c(5, 2);
  int seen = 1;
  while (c.next()) ++seen;
  CHECK(seen == 10);
  CHECK(Combination::unrank(5, 2, 9).indices() == std::vector<int>{3, 4});
  CompositionIterator it(5, 2);
  int comps = 0;
  for (; !it.done(); it.next()) ++comps;
  CHECK(comps == 4);
}
