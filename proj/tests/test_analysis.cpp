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

#include <cmath>

#include "helpers.hpp"
#include "ppath/analysis.hpp"
#include "ppath/oracle.hpp"
#include "ppath/simulator.hpp"

using namespace ppath;

namespace {

CircuitEnsemble haar_ensemble(int n, int d, std::uint64_t seed) {
  GateSetSpec g;
  g.seed = seed;
  return {Architecture::brickwork(n, d), g};
}

Mat4 swap_gate() {
  Mat4 u{};
  u[0] = 1.0;
  u[1 * 4 + 2] = 1.0;
  u[2 * 4 + 1] = 1.0;
  u[15] = 1.0;
  return u;
}

}  // namespace

TEST_CASE("reports") {
  const std::vector<double> v{1.0, 2.0, 3.0, 4.0};
  const auto r = make_report("toy", v, 5, 2.0, true);
  CHECK(r.estimate == doctest::Approx(2.5));
  CHECK(r.standard_error == doctest::Approx(std::sqrt(5.0 / 3.0) / 2.0));
  CHECK(r.trials == 4);
  CHECK(r.seed == 5);
  CHECK(r.trial_values == v);
  REQUIRE(r.z_score);
  CHECK(*r.z_score == doctest::Approx(0.5 / r.standard_error));
  CHECK(r.within(1.0));
  CHECK_FALSE(r.within(0.1));
  const std::vector<double> same(10, 0.75);
  const auto z = make_report("flat", same, 0, 0.75);
  CHECK(z.standard_error == 0.0);
  CHECK(z.within(5.0, 1e-12));
}

TEST_CASE("exact Haar weights from enumeration") {
  const auto arch = Architecture::brickwork(4, 3);
  CHECK(exact_fourier_weight_haar(arch, 0) == 1.0);
  for (int k = 1; k <= 3; ++k) CHECK(exact_fourier_weight_haar(arch, k) == 0.0);
  CHECK(exact_fourier_weight_haar(arch, 4) == doctest::Approx(288.0 / (15.0 * 15.0 * 15.0)));
  for (const auto& [n, d] : {std::pair{2, 1}, std::pair{2, 3}, std::pair{6, 2}, std::pair{8, 3}}) {
    const auto a = Architecture::brickwork(n, d);
    const double want = n * std::pow(2.0, d) * std::pow(3.0, d - 1) * std::pow(1.0 / 15, d);
    CHECK(exact_fourier_weight_haar(a, d + 1) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("Haar weight DP equals enumeration at every degree") {
  for (const auto& [n, d] : {std::pair{2, 2}, std::pair{4, 2}, std::pair{4, 3}, std::pair{6, 2}}) {
    const auto arch = Architecture::brickwork(n, d);
    const auto table = haar_fourier_weights(arch);
    CHECK(table.value(0) == 1.0);
    for (int k = 0; k <= full_weight(arch); ++k) {
      INFO("n=" << n << " d=" << d << " k=" << k);
      CHECK(table.value(k) == doctest::Approx(exact_fourier_weight_haar(arch, k)).epsilon(1e-12));
      CHECK(table.entries.at(k).method == WeightMethod::ExactHaar);
    }
  }
  CHECK_THROWS(haar_fourier_weights(Architecture::brickwork(14, 2)));
}

TEST_CASE("per-circuit weights equal the enumerated squared coefficients") {
  const auto c = testing::haar_circuit(4, 2, 17);
  const auto& arch = c.architecture();
  std::vector<double> by_paths(static_cast<std::size_t>(full_weight(arch) + 1), 0.0);
  for_each_legal_path(arch, full_weight(arch), [&](const PauliPath& s) {
    const double f = 16.0 * path_coefficient(c, s, Bitstring::zeros(4));  // 2^n f
    by_paths[static_cast<std::size_t>(s.weight())] += f * f;
  });
  const auto w = circuit_fourier_weights(c);
  REQUIRE(w.size() == by_paths.size());
  for (std::size_t k = 0; k < w.size(); ++k) CHECK(std::abs(w[k] - by_paths[k]) < 1e-12);
}

TEST_CASE("Monte-Carlo weights") {
  const auto ens = haar_ensemble(4, 2, 3);
  const auto r = estimate_fourier_weight(ens, 3, 1000);
  REQUIRE(r.predicted);
  CHECK(*r.predicted == doctest::Approx(exact_fourier_weight_haar(ens.arch, 3)));
  CHECK(r.within(5.0));
  const auto zero = estimate_fourier_weight(ens, 2, 200);
  CHECK(zero.estimate == 0.0);
  CHECK(zero.standard_error == 0.0);
  const auto one_a = estimate_fourier_weight(ens, 4, 1);
  const auto one_b = estimate_fourier_weight(ens, 4, 1);
  CHECK(one_a.estimate == one_b.estimate);
}

TEST_CASE("path moments") {
  const auto ens = haar_ensemble(4, 2, 8);
  const auto id = PauliPath::identity(ens.arch);
  const auto same = path_product_moment(ens, id, id, Bitstring::zeros(4), 50);
  CHECK(same.estimate == doctest::Approx(1.0 / 256));
  CHECK(same.standard_error < 1e-15);
  CHECK_THROWS_AS(orthogonality_check(ens, id, id, Bitstring::zeros(4), 10), ValidationError);

  // Differ only in the last layer.
  const auto s = PauliPath::parse("ZIII|XZII|ZZII", ens.arch);
  const auto t = PauliPath::parse("ZIII|XZII|ZIZI", ens.arch);
  REQUIRE(is_legal(s, ens.arch));
  REQUIRE(is_legal(t, ens.arch));
  const auto r = orthogonality_check(ens, s, t, Bitstring::parse("0110"), 20000);
  CHECK(r.predicted == 0.0);
  CHECK(r.within(5.0, 1e-12));
  const auto diag = path_product_moment(ens, s, s, Bitstring::zeros(4), 20000);
  CHECK(std::abs(diag.estimate - std::pow(1.0 / 15, 3) / 256) < 5 * diag.standard_error);
}

TEST_CASE("XEB against exact providers") {
  const auto ens = haar_ensemble(4, 3, 2);
  const auto unif = xeb(ens, uniform_provider(), 200, 0.0);
  CHECK(std::abs(unif.estimate) < 1e-12);
  const auto flat = xeb(ens, noisy_provider({1.0, true}), 200, 0.0);
  CHECK(std::abs(flat.estimate) < 1e-12);
  const auto ideal = xeb(ens, ideal_provider(), 3000, predicted_noisy_xeb_haar(ens.arch, 0.0));
  CHECK(ideal.within(5.0));
  const auto noisy = xeb(ens, noisy_provider({0.2, true}), 3000, predicted_noisy_xeb_haar(ens.arch, 0.2));
  CHECK(noisy.within(5.0));
  const auto sampled =
      xeb_from_samples(ens, categorical_sampler(ideal_provider(), 50), 3000, predicted_noisy_xeb_haar(ens.arch, 0.0));
  CHECK(sampled.within(5.0));
  const auto again = xeb_from_samples(ens, categorical_sampler(ideal_provider(), 50), 3000);
  CHECK(again.estimate == sampled.estimate);
}

TEST_CASE("predicted noisy XEB is the weight polynomial") {
  const auto arch = Architecture::brickwork(4, 2);
  const auto w = haar_fourier_weights(arch);
  double want = 0.0;
  for (int k = 1; k <= full_weight(arch); ++k) want += std::pow(0.7, k) * w.value(k);
  CHECK(predicted_noisy_xeb_haar(arch, 0.3) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("single-path spoofer") {
  const auto c = testing::haar_circuit(4, 2, 31);
  const auto q = spoofer_distribution(c);
  double s = 0.0;
  for (double v : q) {
    CHECK(v >= 0.0);
    s += v;
  }
  CHECK(s == doctest::Approx(1.0).epsilon(1e-15));
  const double bias = spoofer_bias(c);
  CHECK(bias == doctest::Approx(16.0 * path_coefficient(c, spoofer_path(c.architecture()), Bitstring::zeros(4))));
  CHECK(q[0] == doctest::Approx((1 + bias) / 16));
  CHECK(q[8] == doctest::Approx((1 - bias) / 16));  // qubit 0 set

  const auto swapped = testing::explicit_circuit(Architecture::brickwork(4, 2), swap_gate());
  CHECK(spoofer_bias(swapped) == 0.0);
  for (double v : spoofer_distribution(swapped)) CHECK(v == 1.0 / 16);

  CounterRng rng(4);
  int ones = 0;
  const int draws = 40000;
  for (int i = 0; i < draws; ++i) ones += spoofer_sample(c, rng).bit(0);
  const double p1 = (1 - bias) / 2;
  CHECK(std::abs(ones / static_cast<double>(draws) - p1) < 5 * std::sqrt(p1 * (1 - p1) / draws));

  const auto ens = haar_ensemble(4, 1, 5);
  const auto r = xeb(ens, spoofer_provider(), 20000, 1.0 / 15);
  CHECK(r.within(5.0));
}

TEST_CASE("XQ estimators") {
  const auto ens = haar_ensemble(4, 1, 6);
  const auto single = estimate_xq(ens, XqEstimator::SinglePath, 20000);
  REQUIRE(single.predicted);
  CHECK(*single.predicted == doctest::Approx(1.0 / 15));
  CHECK(single.within(5.0));
  const auto trivial = estimate_xq(ens, XqEstimator::Trivial, 500);
  CHECK(trivial.estimate == 0.0);
  CHECK(trivial.predicted == 0.0);
}

TEST_CASE("TVD curve edge truncations") {
  const auto ens = haar_ensemble(4, 2, 9);
  const NoiseModel noise{0.2, true};
  const std::vector<int> ells{0, 2, 5, 12};
  const auto curve = tvd_vs_ell_curve(ens, noise, ells, 20);
  REQUIRE(curve.rows.size() == 4);
  REQUIRE(curve.delta_sq.size() == 20);
  for (std::uint64_t t = 0; t < 20; ++t) {
    const auto p = noisy_distribution(ens.trial_circuit(t), noise);
    const double to_uniform = 2.0 * tvd(p, std::vector<double>(16, 1.0 / 16));
    CHECK(curve.delta_sq[t][0] == doctest::Approx(to_uniform * to_uniform).epsilon(1e-10));
    CHECK(curve.delta_sq[t][1] == doctest::Approx(to_uniform * to_uniform).epsilon(1e-10));
    CHECK(curve.delta_sq[t][3] < 1e-18);
  }
  REQUIRE(curve.rows[2].bound);
  CHECK(curve.rows[3].bound.value() == 0.0);
  CHECK(curve.rows[2].mean_delta_sq <= *curve.rows[2].bound + 3 * curve.rows[2].stderr_delta_sq);

  const auto no_first = tvd_vs_ell_curve(ens, {0.2, false}, ells, 5);
  CHECK_FALSE(no_first.rows[2].bound);
}

TEST_CASE("uniformity bounds") {
  const auto b = uniformity_bounds(6, 3, 0.1);
  CHECK(b.lower == doctest::Approx(std::pow(0.9, 6) * std::pow(0.4, 3) / 12));
  CHECK(b.lower == doctest::Approx(2.834e-3).epsilon(1e-3));
  CHECK(b.upper_pinsker == doctest::Approx(std::sqrt(3.0 * std::exp(-0.3))));
  CHECK(b.upper_anticoncentration == doctest::Approx(std::exp(-0.3)));
  CHECK(uniformity_bounds(6, 3, 1.0).lower == 0.0);
  CHECK(uniformity_bounds(4, 3, 0.1).lower == b.lower);

  const auto r = tvd_to_uniform(haar_ensemble(4, 2, 1), {0.1, false}, 100);
  CHECK(r.estimate > 0.0);
  CHECK(r.estimate < 1.0);
}

TEST_CASE("gate moments") {
  const auto m = transfer_second_moments(GateKind::Haar, 1, 20000);
  CHECK(m.trials == 20000);
  for (int q = 0; q < 16; ++q) {
    for (int p = 0; p < 16; ++p) {
      const auto i = static_cast<std::size_t>(q * 16 + p);
      const double want = (p == 0 && q == 0) ? 1.0 : (p == 0 || q == 0) ? 0.0 : 1.0 / 15;
      CHECK(std::abs(m.mean[i] - want) <= 5 * m.standard_error[i] + 1e-12);
    }
  }
  CHECK(fsim_commutation_deviation(3, 100) < 1e-12);
  const auto pair = dressed_pair_moments(Pauli::X, Pauli::Z, 2, 20000);
  for (const auto& r : pair) CHECK(r.within(5.0, 1e-12));
  CHECK_THROWS(dressed_pair_moments(Pauli::X, Pauli::X, 2, 10));
}

TEST_CASE("ensemble trials replay from the seed") {
  const auto ens = haar_ensemble(4, 2, 44);
  CHECK(ens.trial_circuit(3).gates() == ens.trial_circuit(3).gates());
  CHECK(ens.trial_circuit(3).gates() != ens.trial_circuit(4).gates());
  const auto a = xeb(ens, ideal_provider(), 64, std::nullopt, 1);
  const auto b = xeb(ens, ideal_provider(), 64, std::nullopt, 5);
  CHECK(a.estimate == b.estimate);
  CHECK(a.standard_error == b.standard_error);
}
