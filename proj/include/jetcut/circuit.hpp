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
#include <utility>
#include <vector>

#include "jetcut/graph.hpp"
#include "jetcut/qaoa.hpp"

namespace jetcut {

enum class GateKind { kH, kRX, kRZ, kCNOT, kSWAP };

std::string to_string(GateKind k);

/// Native gate. For CNOT q0 is the control and q1 the target; single-qubit
/// gates leave q1 at -1. Rotations use RX(t) = exp(-i t X / 2) and
/// RZ(t) = exp(-i t Z / 2).
struct Gate {
  GateKind kind;
  int q0;
  int q1 = -1;
  double theta = 0.0;

  bool two_qubit() const {
    return kind == GateKind::kCNOT || kind == GateKind::kSWAP;
  }
  bool operator==(const Gate&) const = default;
};

class GateCircuit {
 public:
  explicit GateCircuit(int n) : n_(n) {}

  int n() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }

  /// Appends after checking operand range and distinctness.
  void add(Gate g);
  void h(int q) { add({GateKind::kH, q}); }
  void rx(int q, double t) { add({GateKind::kRX, q, -1, t}); }
  void rz(int q, double t) { add({GateKind::kRZ, q, -1, t}); }
  void cnot(int c, int t) { add({GateKind::kCNOT, c, t}); }
  void swap(int a, int b) { add({GateKind::kSWAP, a, b}); }

  bool operator==(const GateCircuit&) const = default;

 private:
  int n_;
  std::vector<Gate> gates_;
};

/// Undirected set of qubit pairs on which two-qubit gates may act.
class CouplingMap {
 public:
  CouplingMap(int n, std::vector<std::pair<int, int>> pairs);
  static CouplingMap all_to_all(int n);
  static CouplingMap line(int n);
  /// One `i j` pair per line; the qubit count is 1 + the largest index
  /// unless `n` is larger.
  static CouplingMap read(std::istream& in, int n = 0);

  int n() const { return n_; }
  bool allowed(int a, int b) const;
  bool connected() const;
  /// Shortest path from a to b (inclusive); empty when unreachable.
  std::vector<int> shortest_path(int a, int b) const;

 private:
  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<char> allowed_;
};

/// Routed circuit plus the final placement: physical qubit of each logical.
struct RoutedCircuit {
  GateCircuit circuit;
  std::vector<int> logical_to_physical;
  int swap_count = 0;
};

struct CircuitStats {
  int cnot_count = 0;
  int single_qubit_count = 0;
  int swap_count = 0;
  int depth = 0;
};

/// Native-gate QAOA circuit: H on every qubit, then per layer j a
/// CNOT(a,b) RZ(-gamma_j w)(b) CNOT(a,b) block for each edge followed by
/// RX(2 beta_j) on every qubit.
///
/// The ZZ block realizes exp(+i gamma w Z_a Z_b / 2), which equals the cost
/// unitary exp(-i gamma w (1 - Z_a Z_b) / 2) up to global phase, hence the
/// negative RZ angle. Gate count: n + p (3|E| + n).
GateCircuit lower(const WeightedGraph& g, const QaoaParams& params);

/// Greedy routing with identity initial placement. For every two-qubit gate
/// on non-adjacent physical qubits the first operand is SWAPped along a
/// shortest coupling path until it neighbours the second. Gates already on
/// allowed pairs are copied unchanged.
RoutedCircuit route(const GateCircuit& c, const CouplingMap& map);

/// Applies the gates in order to |0...0>.
Statevector simulate_gates(const GateCircuit& c,
                           int max_qubits = kDefaultMaxQubits);

/// Relabels a state over physical qubits back to logical order.
Statevector unpermute(const Statevector& physical,
                      const std::vector<int>& logical_to_physical);

/// Counts plus ASAP depth (each gate sits one layer above the latest gate on
/// any of its qubits).
CircuitStats stats(const GateCircuit& c);

/// `GATE q0 [q1] [theta]` per line, preceded by a `qubits n` header.
void write_circuit_text(const GateCircuit& c, std::ostream& out);
/// OpenQASM 2.0 with qelib1.inc gate names.
void write_circuit_qasm(const GateCircuit& c, std::ostream& out);

}  // namespace jetcut
