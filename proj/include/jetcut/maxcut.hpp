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

#include "jetcut/graph.hpp"

namespace jetcut {

/// Default qubit / enumeration cap shared by the oracle and the simulator.
inline constexpr int kDefaultMaxQubits = 24;

/// Two-way node assignment; bit i is node (qubit) i. When packed into an
/// integer the layout is little-endian: node i <-> bit i.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<std::uint8_t> bits);
  static Partition from_index(std::uint64_t z, int n);

  int n() const { return static_cast<int>(bits_.size()); }
  int operator[](int i) const { return bits_[static_cast<std::size_t>(i)]; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }
  std::uint64_t to_index() const;
  Partition complement() const;

  /// Character i is node i's side, e.g. "0110".
  std::string to_string() const;
  static Partition from_string(const std::string& s);

  bool operator==(const Partition&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

struct CutResult {
  Partition best;
  double value = 0.0;
  bool optimum = false;  // only set by the exact oracle
};

/// Sum of w over edges whose endpoints lie on different sides. Each
/// undirected edge counts once, accumulated in the graph's edge order.
double cut_value(const WeightedGraph& g, const Partition& x);

/// Exact Max-Cut by enumerating the 2^(n-1) partitions with node 0 on side 0.
/// Ties resolve to the lowest packed index.
CutResult brute_force_maxcut(const WeightedGraph& g,
                             int max_nodes = kDefaultMaxQubits);

/// Diagonal of the cost Hamiltonian: entry z = cut_value(g, from_index(z)).
/// Summation order per entry matches cut_value bit-for-bit.
std::vector<double> cost_spectrum(const WeightedGraph& g,
                                  int max_qubits = kDefaultMaxQubits);

}  // namespace jetcut
