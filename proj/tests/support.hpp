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

#include <cstdint>
#include <numbers>
#include <vector>

#include "jetcut/graph.hpp"
#include "jetcut/maxcut.hpp"
#include "jetcut/qaoa.hpp"
#include "jetcut/rng.hpp"

namespace jetcut::testing {

// Erdos-Renyi style graph with weights uniform in (0, pi]; always at least
// one edge when n >= 2.
inline WeightedGraph random_graph(int n, double density, Rng& rng) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.uniform() < density)
        edges.push_back({i, j, std::numbers::pi * (1.0 - rng.uniform())});
  if (edges.empty() && n >= 2)
    edges.push_back({0, n - 1, std::numbers::pi * (1.0 - rng.uniform())});
  return WeightedGraph(n, std::move(edges));
}

inline QaoaParams random_params(int depth, Rng& rng) {
  QaoaParams p;
  for (int j = 0; j < depth; ++j) {
    p.gammas.push_back(rng.uniform(-2.0, 2.0));
    p.betas.push_back(rng.uniform(-2.0, 2.0));
  }
  return p;
}

inline Partition random_partition(int n, Rng& rng) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  for (auto& b : bits) b = rng.uniform() < 0.5 ? 0 : 1;
  return Partition(std::move(bits));
}

}  // namespace jetcut::testing
