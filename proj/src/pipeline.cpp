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

#include "jetcut/pipeline.hpp"

#include <optional>
#include <stdexcept>

#include "jetcut/baselines.hpp"
#include "jetcut/graph.hpp"
#include "jetcut/rng.hpp"

namespace jetcut {

namespace {

ResultRow scored(const Event& event, const Partition& x, std::string algo) {
  const MetricRecord m = score(event, x, algo);
  ResultRow r;
  r.algorithm = std::move(algo);
  r.event_id = event.id();
  r.bitstring = x.to_string();
  r.angle1 = m.angle1;
  r.angle2 = m.angle2;
  r.sum = m.sum;
  r.valid = m.valid;
  return r;
}

ResultRow qaoa_row(const Event& event, int k, int depth, const QaoaOutcome& out,
                   std::optional<double> c_max) {
  ResultRow r = scored(event, out.best_sample, "qaoa");
  r.depth = depth;
  r.k = k;
  r.expectation = out.expectation;
  r.best_sample_value = out.best_sample_value;
  r.c_max = c_max;
  r.eval_count = out.eval_count;
  return r;
}

std::optional<double> oracle_value(const WeightedGraph& g, int cap) {
  if (g.n() > cap) return std::nullopt;
  return brute_force_maxcut(g, cap).value;
}

}  // namespace

ResultRow run_qaoa(const Event& event, int k, const QaoaConfig& cfg,
                   int oracle_cap) {
  const WeightedGraph g = build_graph(event, k);
  return qaoa_row(event, k, cfg.depth, optimize(g, cfg),
                  oracle_value(g, oracle_cap));
}

std::vector<ResultRow> run_qaoa_depths(const Event& event, int k,
                                       const QaoaConfig& cfg, int oracle_cap) {
  const WeightedGraph g = build_graph(event, k);
  const auto outs = optimize_all_depths(g, cfg);
  const auto c_max = oracle_value(g, oracle_cap);
  std::vector<ResultRow> rows;
  for (std::size_t p = 0; p < outs.size(); ++p)
    rows.push_back(qaoa_row(event, k, static_cast<int>(p) + 1, outs[p], c_max));
  return rows;
}

ResultRow run_baseline(const Event& event, const std::string& algo) {
  if (algo == "kt") return scored(event, kt_cluster(event).assignment, "kt");
  if (algo == "kmeans")
    return scored(event, kmeans_cluster(event).assignment, "kmeans");
  throw std::invalid_argument("unknown baseline '" + algo +
                              "' (expected kt or kmeans)");
}

ResultRow run_random_partition(const Event& event, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::uint8_t> bits(event.size());
  for (auto& b : bits) b = rng.uniform() < 0.5 ? 0 : 1;
  return scored(event, Partition(std::move(bits)), "random");
}

}  // namespace jetcut
