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

#include "jetcut/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace jetcut {

namespace {

constexpr int kMaxKMeansPasses = 100;

Vec3 unit_or_zero(const Vec3& v) {
  const double n = v.norm();
  return n > 0.0 ? Vec3(v / n) : Vec3(Vec3::Zero());
}

void require_two(const Event& event, const char* who) {
  if (event.size() < 2)
    throw std::invalid_argument(std::string(who) +
                                ": needs at least 2 particles");
}

JetResult make_result(const Event& event, Partition x, std::string algo) {
  JetResult r;
  r.jet_momenta = {jet_momentum(event, x, 0), jet_momentum(event, x, 1)};
  r.assignment = std::move(x);
  r.algorithm = std::move(algo);
  return r;
}

}  // namespace

FourMomentum four_momentum(const Particle& p) { return {p.momentum(), p.e()}; }

FourMomentum jet_momentum(const Event& event, const Partition& x, int side) {
  if (x.n() != static_cast<int>(event.size()))
    throw std::invalid_argument(
        "jet_momentum: partition size != particle count");
  FourMomentum sum;
  const auto parts = event.particles();
  for (int i = 0; i < x.n(); ++i)
    if (x[i] == side) sum += four_momentum(parts[static_cast<std::size_t>(i)]);
  return sum;
}

double kt_distance(const FourMomentum& a, const FourMomentum& b) {
  const double e2 = std::min(a.e * a.e, b.e * b.e);
  const double cos_theta =
      std::clamp(unit_or_zero(a.p).dot(unit_or_zero(b.p)), -1.0, 1.0);
  return 2.0 * e2 * (1.0 - cos_theta);
}

JetResult kt_cluster(const Event& event) {
  require_two(event, "kt_cluster");
  const auto parts = event.particles();

  std::vector<FourMomentum> jets;
  std::vector<std::vector<int>> members;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    jets.push_back(four_momentum(parts[i]));
    members.push_back({static_cast<int>(i)});
  }

  std::vector<KtMerge> merges;
  while (jets.size() > 2) {
    std::size_t bi = 0, bj = 1;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < jets.size(); ++i) {
      for (std::size_t j = i + 1; j < jets.size(); ++j) {
        const double d = kt_distance(jets[i], jets[j]);
        if (d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    }
    jets[bi] += jets[bj];
    members[bi].insert(members[bi].end(), members[bj].begin(),
                       members[bj].end());
    jets.erase(jets.begin() + static_cast<std::ptrdiff_t>(bj));
    members.erase(members.begin() + static_cast<std::ptrdiff_t>(bj));

    FourMomentum total;
    for (const auto& j : jets) total += j;
    merges.push_back({static_cast<int>(bi), static_cast<int>(bj), best, total});
  }

  std::vector<std::uint8_t> bits(parts.size(), 0);
  for (int m : members[1]) bits[static_cast<std::size_t>(m)] = 1;
  JetResult r = make_result(event, Partition(std::move(bits)), "kt");
  r.merges = std::move(merges);
  return r;
}

JetResult kmeans_cluster(const Event& event, std::uint64_t /*seed*/) {
  require_two(event, "kmeans_cluster");
  const auto parts = event.particles();
  const std::size_t n = parts.size();
  std::vector<Vec3> dirs;
  dirs.reserve(n);
  for (const auto& p : parts) dirs.push_back(direction(p));

  std::size_t si = 0, sj = 1;
  double widest = -1.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = angle_between(dirs[i], dirs[j]);
      if (a > widest) {
        widest = a;
        si = i;
        sj = j;
      }
    }
  std::array<Vec3, 2> centroid{dirs[si], dirs[sj]};

  std::vector<std::uint8_t> labels(n, 2);  // 2 = not yet assigned
  std::vector<double> history;
  int changed_passes = 0;
  for (int pass = 0; pass < kMaxKMeansPasses; ++pass) {
    std::vector<std::uint8_t> next(n);
    for (std::size_t i = 0; i < n; ++i)
      next[i] = angle_between(dirs[i], centroid[1]) <
                        angle_between(dirs[i], centroid[0])
                    ? 1
                    : 0;

    for (int c = 0; c < 2; ++c) {
      if (std::find(next.begin(), next.end(), c) != next.end()) continue;
      const Vec3& other = centroid[1 - c];
      std::size_t far = 0;
      double far_angle = -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double a = angle_between(dirs[i], other);
        if (a > far_angle) {
          far_angle = a;
          far = i;
        }
      }
      next[far] = static_cast<std::uint8_t>(c);
      centroid[static_cast<std::size_t>(c)] = dirs[far];
    }

    double objective = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double a = angle_between(dirs[i], centroid[next[i]]);
      objective += a * a;
    }
    history.push_back(objective);

    if (next == labels) break;
    labels = std::move(next);
    ++changed_passes;

    std::array<Vec3, 2> sum{Vec3::Zero(), Vec3::Zero()};
    for (std::size_t i = 0; i < n; ++i) sum[labels[i]] += dirs[i];
    for (int c = 0; c < 2; ++c) {
      const double len = sum[static_cast<std::size_t>(c)].norm();
      if (len > 0.0)
        centroid[static_cast<std::size_t>(c)] =
            sum[static_cast<std::size_t>(c)] / len;
    }
  }

  JetResult r = make_result(event, Partition(std::move(labels)), "kmeans");
  r.iterations = changed_passes;
  r.objective_history = std::move(history);
  return r;
}

}  // namespace jetcut
