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

#include "jetcut/maxcut.hpp"

#include <sstream>
#include <stdexcept>

namespace jetcut {

Partition::Partition(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_)
    if (b > 1) throw std::invalid_argument("partition: bits must be 0 or 1");
}

Partition Partition::from_index(std::uint64_t z, int n) {
  if (n < 0 || n > 64) throw std::invalid_argument("partition: bad width");
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) bits[static_cast<std::size_t>(i)] = (z >> i) & 1U;
  return Partition(std::move(bits));
}

std::uint64_t Partition::to_index() const {
  if (bits_.size() > 64)
    throw std::logic_error("partition: too wide to pack into 64 bits");
  std::uint64_t z = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    z |= static_cast<std::uint64_t>(bits_[i]) << i;
  return z;
}

Partition Partition::complement() const {
  auto bits = bits_;
  for (auto& b : bits) b ^= 1U;
  return Partition(std::move(bits));
}

std::string Partition::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

Partition Partition::from_string(const std::string& s) {
  std::vector<std::uint8_t> bits;
  bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1')
      throw std::invalid_argument(
          "partition: bitstring must be 0/1 characters");
    bits.push_back(c == '1');
  }
  return Partition(std::move(bits));
}

double cut_value(const WeightedGraph& g, const Partition& x) {
  if (x.n() != g.n()) {
    std::ostringstream msg;
    msg << "cut_value: partition has " << x.n() << " nodes, graph has "
        << g.n();
    throw std::invalid_argument(msg.str());
  }
  double c = 0.0;
  for (const auto& e : g.edges())
    if (x[e.i] != x[e.j]) c += e.w;
  return c;
}

CutResult brute_force_maxcut(const WeightedGraph& g, int max_nodes) {
  const int n = g.n();
  if (n > max_nodes || n > 62) {
    std::ostringstream msg;
    msg << "brute_force_maxcut: " << n
        << " nodes exceeds the enumeration cap of " << max_nodes
        << "; use the QAOA solver for larger instances";
    throw std::invalid_argument(msg.str());
  }
  if (n == 0) return {Partition{}, 0.0, true};

  const std::uint64_t reps = std::uint64_t{1} << (n - 1);
  std::uint64_t best_z = 0;
  double best = -1.0;
  for (std::uint64_t r = 0; r < reps; ++r) {
    const std::uint64_t z = r << 1;  // node 0 fixed on side 0
    double c = 0.0;
    for (const auto& e : g.edges())
      if (((z >> e.i) ^ (z >> e.j)) & 1U) c += e.w;
    if (c > best) {
      best = c;
      best_z = z;
    }
  }
  return {Partition::from_index(best_z, n), best, true};
}

std::vector<double> cost_spectrum(const WeightedGraph& g, int max_qubits) {
  const int n = g.n();
  if (n > max_qubits || n >= 63) {
    std::ostringstream msg;
    msg << "cost_spectrum: 2^" << n
        << " entries exceeds the memory budget of 2^" << max_qubits;
    throw std::invalid_argument(msg.str());
  }
  const std::size_t dim = std::size_t{1} << n;
  std::vector<double> spec(dim, 0.0);
  for (const auto& e : g.edges()) {
    const std::size_t mask = (std::size_t{1} << e.i) | (std::size_t{1} << e.j);
    for (std::size_t z = 0; z < dim; ++z) {
      const std::size_t m = z & mask;
      if (m != 0 && m != mask) spec[z] += e.w;
    }
  }
  return spec;
}

}  // namespace jetcut
