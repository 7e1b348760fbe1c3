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

#include <iosfwd>
#include <string>
#include <vector>

#include "jetcut/event.hpp"

namespace jetcut {

struct Edge {
  int i;  // i < j
  int j;
  double w;  // radians, in (0, pi]

  bool operator==(const Edge&) const = default;
};

/// Undirected angle-weighted graph. Edges are kept sorted by (i, j).
class WeightedGraph {
 public:
  WeightedGraph() = default;
  /// Validates and canonicalizes: swaps to i < j, rejects duplicates,
  /// out-of-range nodes and weights outside (0, pi].
  WeightedGraph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  double max_weight() const;
  double total_weight() const;
  std::vector<int> degrees() const;

  /// Diagnostics collected during construction from an event
  /// (e.g. coincident particle directions).
  const std::vector<std::string>& warnings() const { return warnings_; }
  void add_warning(std::string w) { warnings_.push_back(std::move(w)); }

  bool operator==(const WeightedGraph& o) const {
    return n_ == o.n_ && edges_ == o.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> warnings_;
};

/// Event graph keeping, for every node, its k largest-angle edges.
///
/// Selection is per node (descending weight, ties to the lower partner
/// index) and symmetrized by union: an edge survives if either endpoint
/// selected it, so every node ends with degree >= k unless coincident
/// directions removed candidates. Pairs with zero opening angle are
/// dropped and reported through warnings().
WeightedGraph build_graph(const Event& event, int k);

/// All n(n-1)/2 pairs; identical to build_graph(event, n - 1).
WeightedGraph complete_graph(const Event& event);

/// Debug dump, one `i j w` line per edge.
void dump_graph(const WeightedGraph& g, std::ostream& out);

}  // namespace jetcut
