// Copyright 2026 The jetcut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "jetcut/qaoa.hpp"
#include "oracles/dense_simulator.hpp"
#include "support.hpp"

using namespace jetcut;
using jetcut::testing::random_graph;
using jetcut::testing::random_params;

namespace {

constexpr double kPi = std::numbers::pi;

// Depth-1 single-edge state by hand: amplitudes over z = 00, 01, 10, 11.
std::array<std::complex<double>, 4> single_edge_by_hand(double w, double gamma,
                                                        double beta) {
  const std::complex<double> i{0.0, 1.0};
  std::array<std::complex<double>, 4> a;
  const std::array<double, 4> c{0.0, w, w, 0.0};
  for (int z = 0; z < 4; ++z)
    a[static_cast<std::size_t>(z)] =
        0.5 * std::exp(-i * gamma * c[static_cast<std::size_t>(z)]);
  // exp(-i beta X) on each qubit.
  const double cb = std::cos(beta), sb = std::sin(beta);
  auto rx = [&](int bit) {
    const int m = 1 << bit;
    for (int z = 0; z < 4; ++z) {
      if (z & m) continue;
      const auto x = a[static_cast<std::size_t>(z)],
                 y = a[static_cast<std::size_t>(z | m)];
      a[static_cast<std::size_t>(z)] = cb * x - i * sb * y;
      a[static_cast<std::size_t>(z | m)] = -i * sb * x + cb * y;
    }
  };
  rx(0);
  rx(1);
  return a;
}

double single_edge_expectation_by_hand(double w, double gamma, double beta) {
  const auto a = single_edge_by_hand(w, gamma, beta);
  return w * (std::norm(a[1]) + std::norm(a[2]));
}

}  // namespace

TEST_CASE("plus state") {
  const auto one = prepare_plus_state(1);
  CHECK(one[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(one[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  const auto two = prepare_plus_state(2);
  for (std::size_t z = 0; z < 4; ++z)
    CHECK(two[z] == std::complex<double>(0.5, 0.0));
  for (int n = 0; n <= 20; ++n)
    CHECK(std::abs(prepare_plus_state(n).norm() - 1.0) < 1e-12);
}

TEST_CASE("memory guard") {
  CHECK_THROWS_AS(prepare_plus_state(25), std::length_error);
  CHECK_THROWS_AS(prepare_plus_state(5, 4), std::length_error);
  try {
    prepare_plus_state(30);
  } catch (const std::length_error& e) {
    CHECK(std::string(e.what()).find("cap of 24") != std::string::npos);
  }
}

TEST_CASE("cost layer") {
  const WeightedGraph edge(2, {{0, 1, kPi}});
  const auto spec = cost_spectrum(edge);

  auto psi = prepare_plus_state(2);
  apply_cost_layer(psi, spec, 0.0);
  for (std::size_t z = 0; z < 4; ++z)
    CHECK(psi[z] == std::complex<double>(0.5, 0.0));

  apply_cost_layer(psi, spec, 1.0);
  // Phases (1, e^{-i pi}, e^{-i pi}, 1).
  CHECK(std::abs(psi[0] - 0.5) < 1e-15);
  CHECK(std::abs(psi[1] + 0.5) < 1e-15);
  CHECK(std::abs(psi[2] + 0.5) < 1e-15);
  CHECK(std::abs(psi[3] - 0.5) < 1e-15);
}

TEST_CASE("mixer layer") {
  Rng rng(3);
  std::vector<Amplitude> amps(4);
  for (auto& a : amps) a = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
  double nrm = 0;
  for (auto& a : amps) nrm += std::norm(a);
  for (auto& a : amps) a /= std::sqrt(nrm);
  const Statevector psi0(2, amps);

  auto psi = psi0;
  apply_mixer_layer(psi, 0.0);
  for (std::size_t z = 0; z < 4; ++z) CHECK(psi[z] == psi0[z]);

  psi = psi0;
  apply_mixer_layer(psi, kPi / 2);
  for (std::size_t z = 0; z < 4; ++z)
    CHECK(std::abs(std::abs(psi[z]) - std::abs(psi0[3 - z])) < 1e-12);
  CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
}

TEST_CASE("expectation values") {
  const double w = 1.7;
  const WeightedGraph edge(2, {{0, 1, w}});
  const auto spec = cost_spectrum(edge);
  CHECK(expectation(prepare_plus_state(2), spec) ==
        doctest::Approx(w / 2).epsilon(1e-15));
  for (std::uint64_t z = 0; z < 4; ++z)
    CHECK(expectation(Statevector::basis(2, z), spec) == spec[z]);

  Rng rng(8);
  const auto g = random_graph(6, 0.6, rng);
  const auto s = cost_spectrum(g);
  auto psi = run_circuit(g, random_params(2, rng));
  const double before = expectation(psi, s);
  apply_cost_layer(psi, s, 0.77);
  CHECK(expectation(psi, s) == doctest::Approx(before).epsilon(1e-12));
}

TEST_CASE("run_circuit identity layers") {
  Rng rng(5);
  const auto g = random_graph(5, 0.7, rng);
  const auto plus = prepare_plus_state(5);
  const auto psi = run_circuit(g, QaoaParams{{0.0}, {0.0}});
  for (std::size_t z = 0; z < plus.dim(); ++z) CHECK(psi[z] == plus[z]);

  const auto p = random_params(2, rng);
  const auto a = run_circuit(g, p);
  const auto b = run_circuit(g, zero_pad_schedule(p));
  for (std::size_t z = 0; z < a.dim(); ++z) CHECK(a[z] == b[z]);
}

TEST_CASE("single-edge depth-1 expectation matches the closed form") {
  Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    const double w = rng.uniform(0.1, kPi);
    const double gamma = rng.uniform(-3, 3), beta = rng.uniform(-3, 3);
    const double closed =
        w * (0.5 + 0.5 * std::sin(4 * beta) * std::sin(gamma * w));
    CHECK(single_edge_expectation_by_hand(w, gamma, beta) ==
          doctest::Approx(closed).epsilon(1e-12));

    const WeightedGraph edge(2, {{0, 1, w}});
    const auto psi = run_circuit(edge, QaoaParams{{gamma}, {beta}});
    CHECK(expectation(psi, cost_spectrum(edge)) ==
          doctest::Approx(closed).epsilon(1e-12));
  }
  const WeightedGraph unit(2, {{0, 1, 1.0}});
  const auto psi = run_circuit(unit, QaoaParams{{kPi / 2}, {kPi / 8}});
  CHECK(expectation(psi, cost_spectrum(unit)) ==
        doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("run_circuit agrees with the dense-matrix simulator") {
  Rng rng(101);
  for (int t = 0; t < 40; ++t) {
    const int n = 2 + static_cast<int>(rng.next() % 3);
    const auto g = random_graph(n, 0.7, rng);
    const auto p = random_params(1 + static_cast<int>(rng.next() % 3), rng);
    const auto dense = jetcut::testing::dense_qaoa_state(g, p);
    const auto psi = run_circuit(g, p);
    CHECK(jetcut::testing::max_diff_up_to_phase(dense, psi) < 1e-10);
    CHECK(expectation(psi, cost_spectrum(g)) ==
          doctest::Approx(jetcut::testing::dense_expectation(g, dense))
              .epsilon(1e-10));
  }
}

TEST_CASE("layer invariants over random instances") {
  Rng rng(77);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + static_cast<int>(rng.next() % 7);
    const auto g = random_graph(n, 0.5, rng);
    const auto spec = cost_spectrum(g);
    const auto p = random_params(1 + static_cast<int>(rng.next() % 3), rng);

    auto psi = prepare_plus_state(n);
    for (int j = 0; j < p.depth(); ++j) {
      const auto probs = psi.probabilities();
      apply_cost_layer(psi, spec, p.gammas[static_cast<std::size_t>(j)]);
      CHECK(std::abs(psi.norm() - 1.0) < 1e-10);
      const auto after = psi.probabilities();
      for (std::size_t z = 0; z < probs.size(); ++z)
        CHECK(std::abs(after[z] - probs[z]) < 1e-14);
      apply_mixer_layer(psi, p.betas[static_cast<std::size_t>(j)]);
      CHECK(std::abs(psi.norm() - 1.0) < 1e-10);
    }

    auto shifted = p;
    const auto j = static_cast<std::size_t>(
        rng.next() % static_cast<std::uint64_t>(p.depth()));
    shifted.betas[j] += kPi / 2;
    CHECK(std::abs(expectation(run_circuit(g, p), spec) -
                   expectation(run_circuit(g, shifted), spec)) < 1e-9);
  }
}

TEST_CASE("sampling") {
  const auto basis = Statevector::basis(3, 5);
  const auto h = sample(basis, 100, 1);
  REQUIRE(h.size() == 1);
  CHECK(h.at(5) == 100);

  const auto a = sample(prepare_plus_state(4), 500, 9);
  const auto b = sample(prepare_plus_state(4), 500, 9);
  CHECK(a == b);
  int total = 0;
  for (const auto& [z, c] : a) total += c;
  CHECK(total == 500);

  // Binomial(10^6, 1/2): sigma = 500.
  const auto big = sample(prepare_plus_state(1), 1000000, 12345);
  CHECK(std::abs(big.at(0) - 500000) <= 2000);
  CHECK(big.at(0) + big.at(1) == 1000000);

  CHECK_THROWS(sample(basis, 0, 1));
}

TEST_CASE("schedule interpolation") {
  const QaoaParams one{{0.4}, {0.2}};
  const auto two = interpolate_schedule(one);
  CHECK(two.gammas == std::vector<double>{0.4, 0.4});
  CHECK(two.betas == std::vector<double>{0.2, 0.2});

  // Depth 2 samples at 1/4, 3/4 resampled at 1/6, 1/2, 5/6.
  const QaoaParams d2{{1.0, 2.0}, {0.5, 0.1}};
  const auto d3 = interpolate_schedule(d2);
  REQUIRE(d3.depth() == 3);
  CHECK(d3.gammas[0] == 1.0);
  CHECK(d3.gammas[1] == doctest::Approx(1.5));
  CHECK(d3.gammas[2] == 2.0);
  CHECK(d3.betas[1] == doctest::Approx(0.3));

  // Depth 3 at 1/6, 1/2, 5/6 resampled at 1/8, 3/8, 5/8, 7/8:
  // 3/8 lies 5/8 of the way from 1/6 to 1/2.
  const QaoaParams e3{{0.0, 1.0, 3.0}, {0.0, 0.0, 0.0}};
  const auto e4 = interpolate_schedule(e3);
  CHECK(e4.gammas[0] == 0.0);
  CHECK(e4.gammas[1] == doctest::Approx(0.625));
  CHECK(e4.gammas[2] == doctest::Approx(1.75));
  CHECK(e4.gammas[3] == 3.0);

  const auto padded = zero_pad_schedule(d2);
  CHECK(padded.gammas == std::vector<double>{1.0, 2.0, 0.0});
  CHECK(padded.betas == std::vector<double>{0.5, 0.1, 0.0});
}

TEST_CASE("optimize reaches the single-edge optimum") {
  for (double w : {0.5, 1.0, kPi}) {
    const WeightedGraph edge(2, {{0, 1, w}});
    QaoaConfig cfg;
    const auto out = optimize(edge, cfg);
    CHECK(out.expectation >= 0.999 * w);
    CHECK(out.best_sample_value == w);
    CHECK(out.best_sample.to_string() == "10");  // index 1 precedes index 2
  }
}

TEST_CASE(
    "optimize: depth continuation never loses ground with zero-pad seeding") {
  Rng rng(606);
  for (auto init : {InitStrategy::kInterpolate, InitStrategy::kZeroPad}) {
    for (int t = 0; t < 4; ++t) {
      const auto g = random_graph(7, 0.5, rng);
      QaoaConfig cfg;
      cfg.depth = 3;
      cfg.init = init;
      const auto all = optimize_all_depths(g, cfg);
      REQUIRE(all.size() == 3);
      for (std::size_t p = 1; p < all.size(); ++p)
        CHECK(all[p].expectation >= all[p - 1].expectation - 1e-6);
      const double cmax = brute_force_maxcut(g).value;
      for (const auto& o : all) {
        CHECK(o.expectation <= cmax + 1e-9);
        CHECK(o.best_sample_value <= cmax);
        CHECK(o.best_sample_value == cut_value(g, o.best_sample));
        for (const auto& [z, c] : o.histogram)
          CHECK(cut_value(g, Partition::from_index(z, g.n())) <=
                o.best_sample_value);
      }
    }
  }
}

TEST_CASE("optimize: grid strategy and eval accounting") {
  Rng rng(4);
  const auto g = random_graph(5, 0.8, rng);
  QaoaConfig cfg;
  cfg.depth = 2;
  cfg.init = InitStrategy::kGrid;
  cfg.max_evals = 50;
  const auto all = optimize_all_depths(g, cfg);
  CHECK(all[0].eval_count <= 64 + 50);
  CHECK(all[1].eval_count <= 64 + 100);
  CHECK(all[1].eval_count > all[0].eval_count);
  CHECK(all[1].params.depth() == 2);
}

TEST_CASE("optimize: triangle reaches C_max at depth 3") {
  const WeightedGraph tri(3, {{0, 1, 1.0}, {0, 2, 2.0}, {1, 2, 3.0}});
  QaoaConfig cfg;
  cfg.depth = 3;
  cfg.shots = 1024;
  const auto out = optimize(tri, cfg);
  CHECK(out.best_sample_value == 5.0);
}

TEST_CASE("optimize: configuration errors") {
  const WeightedGraph edge(2, {{0, 1, 1.0}});
  QaoaConfig cfg;
  cfg.depth = 0;
  CHECK_THROWS(optimize(edge, cfg));
  cfg = {};
  cfg.shots = 0;
  CHECK_THROWS(optimize(edge, cfg));
  cfg = {};
  cfg.max_qubits = 1;
  CHECK_THROWS_AS(optimize(edge, cfg), std::length_error);
  CHECK(parse_init_strategy("zero-pad") == InitStrategy::kZeroPad);
  CHECK_THROWS(parse_init_strategy("bogus"));
}
