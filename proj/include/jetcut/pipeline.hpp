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
#include <string>
#include <vector>

#include "jetcut/evaluation.hpp"
#include "jetcut/qaoa.hpp"

namespace jetcut {

/// Event -> graph -> QAOA -> scored row. c_max is filled when the graph is
/// within `oracle_cap` nodes.
ResultRow run_qaoa(const Event& event, int k, const QaoaConfig& cfg,
                   int oracle_cap = kDefaultMaxQubits);

/// One row per depth 1..cfg.depth from a single continuation run.
std::vector<ResultRow> run_qaoa_depths(const Event& event, int k,
                                       const QaoaConfig& cfg,
                                       int oracle_cap = kDefaultMaxQubits);

/// Classical baseline by name: "kt" or "kmeans".
ResultRow run_baseline(const Event& event, const std::string& algo);

/// Control: every particle placed on a side by a fair coin.
ResultRow run_random_partition(const Event& event, std::uint64_t seed);

}  // namespace jetcut
