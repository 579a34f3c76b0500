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

#include <bit>
#include <cmath>
#include <complex>
#include <vector>

#include "ppath/kernels.hpp"
#include "ppath/rng.hpp"

using namespace ppath;
using kernels::KernelSet;

namespace {

std::size_t digit_stride(int n, int q, std::size_t base) {
  std::size_t s = 1;
  for (int i = 0; i < n - 1 - q; ++i) s *= base;
  return s;
}

// Digit-by-digit reference, no blocking.
std::vector<double> naive_transfer(const std::vector<double>& in, int n, int qa, int qb, const double* table) {
  const std::size_t sa = digit_stride(n, qa, 4);
  const std::size_t sb = digit_stride(n, qb, 4);
  std::vector<double> out(in.size(), 0.0);
  for (std::size_t i = 0; i < in.size(); ++i) {
    const std::size_t a = (i / sa) % 4;
    const std::size_t b = (i / sb) % 4;
    const std::size_t rest = i - a * sa - b * sb;
    for (std::size_t qa2 = 0; qa2 < 4; ++qa2) {
      for (std::size_t qb2 = 0; qb2 < 4; ++qb2) {
        out[rest + qa2 * sa + qb2 * sb] += table[(qa2 * 4 + qb2) * 16 + a * 4 + b] * in[i];
      }
    }
  }
  return out;
}

std::vector<std::complex<double>> naive_gate(const std::vector<std::complex<double>>& in, int n, int qa, int qb,
                                             const std::complex<double>* u) {
  const std::size_t sa = digit_stride(n, qa, 2);
  const std::size_t sb = digit_stride(n, qb, 2);
  std::vector<std::complex<double>> out(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    const std::size_t a = (i / sa) % 2;
    const std::size_t b = (i / sb) % 2;
    const std::size_t rest = i - a * sa - b * sb;
    for (std::size_t r = 0; r < 4; ++r) out[rest + (r / 2) * sa + (r % 2) * sb] += u[r * 4 + a * 2 + b] * in[i];
  }
  return out;
}

std::vector<double> random_reals(CounterRng& rng, std::size_t len) {
  std::vector<double> v(len);
  for (auto& x : v) x = rng.normal();
  return v;
}

std::vector<const KernelSet*> all_sets() {
  std::vector<const KernelSet*> out{&kernels::scalar_kernels()};
  if (const auto* a = kernels::avx2_kernels()) out.push_back(a);
  return out;
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_diff(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("kernel sets report their isa") {
  CHECK(kernels::scalar_kernels().isa == kernels::Isa::Scalar);
  if (const auto* a = kernels::avx2_kernels()) {
    CHECK(a->isa == kernels::Isa::Avx2);
    MESSAGE("AVX2 kernels available");
  } else {
    MESSAGE("AVX2 kernels not available; equivalence checks cover the scalar path only");
  }
}

TEST_CASE("apply_transfer matches the digit reference on every pair order") {
  CounterRng rng(1);
  for (int n = 2; n <= 6; ++n) {
    for (int qa = 0; qa < n; ++qa) {
      for (int qb = 0; qb < n; ++qb) {
        if (qa == qb) continue;
        const auto table = random_reals(rng, 256);
        const auto in = random_reals(rng, std::size_t{1} << (2 * n));
        const auto want = naive_transfer(in, n, qa, qb, table.data());
        for (const auto* k : all_sets()) {
          auto got = in;
          k->apply_transfer(got.data(), n, qa, qb, table.data());
          INFO(k->name << " n=" << n << " qa=" << qa << " qb=" << qb);
          CHECK(max_diff(got, want) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("apply_gate matches the digit reference on every pair order") {
  CounterRng rng(2);
  for (int n = 2; n <= 8; ++n) {
    for (int qa = 0; qa < n; ++qa) {
      for (int qb = 0; qb < n; ++qb) {
        if (qa == qb) continue;
        std::vector<std::complex<double>> u(16);
        for (auto& z : u) z = {rng.normal(), rng.normal()};
        std::vector<std::complex<double>> in(std::size_t{1} << n);
        for (auto& z : in) z = {rng.normal(), rng.normal()};
        const auto want = naive_gate(in, n, qa, qb, u.data());
        for (const auto* k : all_sets()) {
          auto got = in;
          k->apply_gate(got.data(), n, qa, qb, u.data());
          INFO(k->name << " n=" << n << " qa=" << qa << " qb=" << qb);
          CHECK(max_diff(got, want) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("depolarize scales by keep^weight") {
  CounterRng rng(3);
  for (int n = 1; n <= 6; ++n) {
    const auto in = random_reals(rng, std::size_t{1} << (2 * n));
    const double keep = 0.83;
    std::vector<double> want(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
      int w = 0;
      for (std::size_t v = i; v != 0; v /= 4) w += (v % 4) != 0;
      want[i] = in[i] * std::pow(keep, w);
    }
    for (const auto* k : all_sets()) {
      auto got = in;
      k->depolarize(got.data(), n, keep);
      INFO(k->name << " n=" << n);
      CHECK(max_diff(got, want) < 1e-14);
    }
  }
}

TEST_CASE("walsh_hadamard matches the signed-sum definition") {
  CounterRng rng(4);
  for (std::size_t len = 1; len <= 1024; len *= 2) {
    const auto in = random_reals(rng, len);
    std::vector<double> want(len, 0.0);
    for (std::size_t x = 0; x < len; ++x) {
      for (std::size_t z = 0; z < len; ++z) want[x] += (std::popcount(x & z) & 1 ? -1.0 : 1.0) * in[z];
    }
    for (const auto* k : all_sets()) {
      auto got = in;
      k->walsh_hadamard(got.data(), len);
      INFO(k->name << " len=" << len);
      CHECK(max_diff(got, want) < 1e-10);
    }
  }
}

TEST_CASE("scalar and AVX2 agree to rounding on large vectors") {
  const auto* avx = kernels::avx2_kernels();
  if (avx == nullptr) return;
  const auto& sc = kernels::scalar_kernels();
  CounterRng rng(5);
  const int n = 8;
  const auto table = random_reals(rng, 256);
  const auto in = random_reals(rng, std::size_t{1} << (2 * n));
  for (const auto [qa, qb] : {std::pair{0, 1}, std::pair{7, 0}, std::pair{3, 6}, std::pair{6, 7}}) {
    auto a = in;
    auto b = in;
    sc.apply_transfer(a.data(), n, qa, qb, table.data());
    avx->apply_transfer(b.data(), n, qa, qb, table.data());
    CHECK(max_diff(a, b) < 1e-12);
  }
  auto a = in;
  auto b = in;
  sc.walsh_hadamard(a.data(), a.size());
  avx->walsh_hadamard(b.data(), b.size());
  CHECK(max_diff(a, b) < 1e-9);
}
