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

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "jetcut/event.hpp"
#include "jetcut/maxcut.hpp"

namespace jetcut {

struct FourMomentum {
  Vec3 p = Vec3::Zero();
  double e = 0.0;

  FourMomentum& operator+=(const FourMomentum& o) {
    p += o.p;
    e += o.e;
    return *this;
  }
  friend FourMomentum operator+(FourMomentum a, const FourMomentum& b) {
    return a += b;
  }
};

FourMomentum four_momentum(const Particle& p);

/// Sum of the 4-momenta of the particles with assignment bit == side.
FourMomentum jet_momentum(const Event& event, const Partition& x, int side);

/// One recombination of the k_t sequence: pseudo-jets i < j (current
/// indices) merged at distance dij; `total` is the summed 4-momentum of all
/// pseudo-jets after the merge.
struct KtMerge {
  int i;
  int j;
  double dij;
  FourMomentum total;
};

struct JetResult {
  Partition assignment;  // particle -> jet 0/1
  std::array<FourMomentum, 2> jet_momenta;
  std::string algorithm;
  int iterations = 0;  // k-means assignment passes that changed labels
  std::vector<double>
      objective_history;        // k-means sum of squared angles per pass
  std::vector<KtMerge> merges;  // k_t recombination log
};

/// e+e- k_t distance 2 min(E_i^2, E_j^2) (1 - cos theta_ij).
double kt_distance(const FourMomentum& a, const FourMomentum& b);

/// Exclusive e+e- k_t clustering down to exactly two jets, E-scheme
/// recombination. Merged pseudo-jets take the lower index and later ones
/// shift down; ties in d_ij go to the lexicographically smallest (i, j).
JetResult kt_cluster(const Event& event);

/// Two-means on unit directions with angular distance.
///
/// Starts from the most separated pair of particles (first pair in (i, j)
/// order on ties), assigns each particle to the nearer centroid (jet 0 on
/// ties), re-centres each cluster on the normalized sum of its directions
/// and stops when the labels repeat or after 100 passes. An emptied cluster
/// is reseeded with the particle farthest from the other centroid. `seed`
/// is accepted for interface symmetry; the procedure is deterministic.
JetResult kmeans_cluster(const Event& event, std::uint64_t seed = 0);

}  // namespace jetcut
