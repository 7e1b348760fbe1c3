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

#include "jetcut/graph.hpp"

#include <algorithm>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace jetcut {

namespace {
// Opening angles at or below this are treated as coincident directions.
constexpr double kCoincidentAngle = 1e-12;
}  // namespace

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("graph: negative node count");
  for (auto& e : edges_) {
    if (e.i > e.j) std::swap(e.i, e.j);
    if (e.i < 0 || e.j >= n || e.i == e.j)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (!(e.w > 0.0 && e.w <= std::numbers::pi + 1e-12))
      throw std::invalid_argument("graph: edge weight outside (0, pi]");
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  });
  const auto dup = std::adjacent_find(
      edges_.begin(), edges_.end(),
      [](const Edge& a, const Edge& b) { return a.i == b.i && a.j == b.j; });
  if (dup != edges_.end()) throw std::invalid_argument("graph: duplicate edge");
}

double WeightedGraph::max_weight() const {
  double m = 0.0;
  for (const auto& e : edges_) m = std::max(m, e.w);
  return m;
}

double WeightedGraph::total_weight() const {
  double s = 0.0;
  for (const auto& e : edges_) s += e.w;
  return s;
}

std::vector<int> WeightedGraph::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(n_), 0);
  for (const auto& e : edges_) {
    ++d[static_cast<std::size_t>(e.i)];
    ++d[static_cast<std::size_t>(e.j)];
  }
  return d;
}

WeightedGraph build_graph(const Event& event, int k) {
  const int n = static_cast<int>(event.size());
  if (k < 1 || k > n - 1) {
    std::ostringstream msg;
    msg << "build_graph: k = " << k << " outside [1, " << n - 1 << "]";
    throw std::invalid_argument(msg.str());
  }

  const auto parts = event.particles();
  std::vector<Vec3> dirs;
  dirs.reserve(parts.size());
  for (const auto& p : parts) dirs.push_back(direction(p));

  std::vector<double> angle(static_cast<std::size_t>(n) * n, 0.0);
  auto at = [&](int a, int b) -> double& {
    return angle[static_cast<std::size_t>(a) * n + b];
  };
  std::vector<std::string> warnings;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      at(a, b) = at(b, a) = angle_between(dirs[a], dirs[b]);
      if (at(a, b) <= kCoincidentAngle) {
        std::ostringstream w;
        w << "particles " << a << " and " << b
          << " share a direction; edge excluded";
        warnings.push_back(w.str());
      }
    }
  }

  std::vector<char> keep(static_cast<std::size_t>(n) * n, 0);
  std::vector<int> partners;
  for (int a = 0; a < n; ++a) {
    partners.clear();
    for (int b = 0; b < n; ++b)
      if (b != a && at(a, b) > kCoincidentAngle) partners.push_back(b);
    std::stable_sort(partners.begin(), partners.end(),
                     [&](int x, int y) { return at(a, x) > at(a, y); });
    const auto take =
        std::min<std::size_t>(partners.size(), static_cast<std::size_t>(k));
    for (std::size_t t = 0; t < take; ++t) {
      const int b = partners[t];
      keep[static_cast<std::size_t>(std::min(a, b)) * n + std::max(a, b)] = 1;
    }
  }

  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (keep[static_cast<std::size_t>(a) * n + b])
        edges.push_back({a, b, std::min(at(a, b), std::numbers::pi)});

  WeightedGraph g(n, std::move(edges));
  for (auto& w : warnings) g.add_warning(std::move(w));
  return g;
}

WeightedGraph complete_graph(const Event& event) {
  return build_graph(event, static_cast<int>(event.size()) - 1);
}

void dump_graph(const WeightedGraph& g, std::ostream& out) {
  const auto flags = out.flags();
  const auto prec = out.precision();
  out << std::setprecision(17);
  for (const auto& e : g.edges())
    out << e.i << ' ' << e.j << ' ' << e.w << '\n';
  out.flags(flags);
  out.precision(prec);
}

}  // namespace jetcut
