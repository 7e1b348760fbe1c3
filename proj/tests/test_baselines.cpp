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

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "jetcut/baselines.hpp"

using namespace jetcut;

namespace {

const std::array<Vec3, 2> kAxes{Vec3(0, 0, 1), Vec3(0, 0, -1)};

Particle along(const Vec3& d, double e) {
  const Vec3 p = e * d.normalized();
  return Particle(p.x(), p.y(), p.z(), e);
}

bool same_up_to_relabel(const Partition& a, const Partition& b) {
  return a == b || a == b.complement();
}

Event permuted(const Event& ev, const std::vector<std::size_t>& order) {
  std::vector<Particle> ps;
  for (auto i : order) ps.push_back(ev.particles()[i]);
  return Event(ev.id(), ps, ev.truth_axes());
}

Partition permute_back(const Partition& x,
                       const std::vector<std::size_t>& order) {
  std::vector<std::uint8_t> bits(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) bits[order[k]] = x.bits()[k];
  return Partition(bits);
}

}  // namespace

TEST_CASE("kt distance") {
  const FourMomentum a{Vec3(2, 0, 0), 2.0};
  const FourMomentum b{Vec3(0, 3, 0), 3.0};
  CHECK(kt_distance(a, b) == doctest::Approx(8.0).epsilon(1e-15));
  CHECK(kt_distance(a, a) == 0.0);
}

TEST_CASE("kt: two particles stay separate") {
  const Event ev(0, {along(Vec3::UnitZ(), 5), along(-Vec3::UnitZ(), 4)}, kAxes);
  const auto r = kt_cluster(ev);
  CHECK(r.merges.empty());
  CHECK(r.assignment.to_string() == "01");
  CHECK(r.algorithm == "kt");
}

TEST_CASE("kt: collinear pair merges first") {
  const Vec3 d = Vec3(1, 1, 0).normalized();
  const Event ev(
      0, {along(d, 40.0), along(-Vec3::UnitZ(), 1.0), along(d, 30.0)}, kAxes);
  const auto r = kt_cluster(ev);
  REQUIRE(r.merges.size() == 1);
  CHECK(r.merges[0].i == 0);
  CHECK(r.merges[0].j == 2);
  CHECK(r.merges[0].dij < 1e-20);
  CHECK(r.assignment[0] == r.assignment[2]);
  CHECK(r.assignment[0] != r.assignment[1]);
}

TEST_CASE("kt: 4-momentum conservation and permutation invariance") {
  GeneratorConfig cfg;
  cfg.n_particles = 15;
  cfg.angular_spread = 0.6;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    cfg.seed = seed;
    const Event ev = generate_two_jet_event(cfg);
    FourMomentum total;
    for (const auto& p : ev.particles()) total += four_momentum(p);

    const auto r = kt_cluster(ev);
    CHECK(r.merges.size() == ev.size() - 2);
    const double scale = total.e;
    for (const auto& m : r.merges) {
      CHECK((m.total.p - total.p).norm() <= 1e-9 * scale);
      CHECK(std::abs(m.total.e - total.e) <= 1e-9 * scale);
    }
    const FourMomentum jets = r.jet_momenta[0] + r.jet_momenta[1];
    CHECK((jets.p - total.p).norm() <= 1e-9 * scale);
    CHECK(std::abs(jets.e - total.e) <= 1e-9 * scale);

    std::vector<std::size_t> order(ev.size());
    for (std::size_t i = 0; i < order.size(); ++i)
      order[i] = order.size() - 1 - i;
    std::rotate(order.begin(), order.begin() + 4, order.end());
    const auto rp = kt_cluster(permuted(ev, order));
    CHECK(same_up_to_relabel(permute_back(rp.assignment, order), r.assignment));
  }
}

TEST_CASE("kmeans: back-to-back pair") {
  const Event ev(0, {along(Vec3::UnitX(), 2), along(-Vec3::UnitX(), 3)}, kAxes);
  const auto r = kmeans_cluster(ev);
  CHECK(r.iterations == 1);
  CHECK(r.assignment.to_string() == "01");
  CHECK(r.algorithm == "kmeans");
}

TEST_CASE("kmeans: recovers tight antipodal cones") {
  GeneratorConfig cfg;
  cfg.n_particles = 6;
  cfg.angular_spread = 0.05;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    cfg.seed = seed;
    const auto le = generate_labelled_event(cfg);
    std::vector<std::uint8_t> truth(le.truth_labels.begin(),
                                    le.truth_labels.end());
    const auto r = kmeans_cluster(le.event);
    CHECK(same_up_to_relabel(r.assignment, Partition(truth)));
  }
}

TEST_CASE("kmeans: objective is non-increasing and order does not matter") {
  GeneratorConfig cfg;
  cfg.n_particles = 20;
  cfg.angular_spread = 1.2;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    cfg.seed = seed;
    const Event ev = generate_two_jet_event(cfg);
    const auto r = kmeans_cluster(ev);
    for (std::size_t t = 1; t < r.objective_history.size(); ++t)
      CHECK(r.objective_history[t] <= r.objective_history[t - 1] + 1e-12);
    const auto& bits = r.assignment.bits();
    CHECK(std::count(bits.begin(), bits.end(), 0) > 0);
    CHECK(std::count(bits.begin(), bits.end(), 1) > 0);

    std::vector<std::size_t> order(ev.size());
    for (std::size_t i = 0; i < order.size(); ++i)
      order[i] = (i * 7 + 3) % order.size();
    const auto rp = kmeans_cluster(permuted(ev, order));
    CHECK(same_up_to_relabel(permute_back(rp.assignment, order), r.assignment));
  }
}

TEST_CASE("jet momenta are exact sums") {
  const Event ev(0,
                 {along(Vec3::UnitX(), 2), along(Vec3::UnitY(), 3),
                  along(-Vec3::UnitX(), 1)},
                 kAxes);
  const auto x = Partition::from_string("010");
  const auto j0 = jet_momentum(ev, x, 0);
  CHECK(j0.e == 3.0);
  CHECK(j0.p.isApprox(Vec3(1, 0, 0)));
  CHECK(jet_momentum(ev, x, 1).e == 3.0);
}
