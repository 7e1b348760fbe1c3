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

#include "jetcut/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <numbers>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace jetcut {

std::string to_string(GateKind k) {
  switch (k) {
    case GateKind::kH:
      return "H";
    case GateKind::kRX:
      return "RX";
    case GateKind::kRZ:
      return "RZ";
    case GateKind::kCNOT:
      return "CNOT";
    case GateKind::kSWAP:
      return "SWAP";
  }
  return "?";
}

void GateCircuit::add(Gate g) {
  auto in_range = [this](int q) { return q >= 0 && q < n_; };
  if (!in_range(g.q0))
    throw std::invalid_argument("gate: operand out of range");
  if (g.two_qubit()) {
    if (!in_range(g.q1))
      throw std::invalid_argument("gate: operand out of range");
    if (g.q0 == g.q1)
      throw std::invalid_argument(
          "gate: two-qubit gate needs distinct operands");
  } else {
    g.q1 = -1;
  }
  gates_.push_back(g);
}

CouplingMap::CouplingMap(int n, std::vector<std::pair<int, int>> pairs)
    : n_(n),
      adj_(static_cast<std::size_t>(std::max(n, 0))),
      allowed_(static_cast<std::size_t>(std::max(n, 0)) * std::max(n, 0), 0) {
  if (n < 1)
    throw std::invalid_argument("coupling map: needs at least 1 qubit");
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b)
      throw std::invalid_argument("coupling map: bad pair");
    if (allowed(a, b)) continue;
    allowed_[static_cast<std::size_t>(a) * n + b] = 1;
    allowed_[static_cast<std::size_t>(b) * n + a] = 1;
    adj_[static_cast<std::size_t>(a)].push_back(b);
    adj_[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& v : adj_) std::sort(v.begin(), v.end());
}

CouplingMap CouplingMap::all_to_all(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  return CouplingMap(n, std::move(pairs));
}

CouplingMap CouplingMap::line(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a + 1 < n; ++a) pairs.emplace_back(a, a + 1);
  return CouplingMap(n, std::move(pairs));
}

CouplingMap CouplingMap::read(std::istream& in, int n) {
  std::vector<std::pair<int, int>> pairs;
  std::string text;
  int line = 0;
  int max_q = n - 1;
  while (std::getline(in, text)) {
    ++line;
    const auto hash = text.find('#');
    if (hash != std::string::npos) text.resize(hash);
    std::istringstream ss(text);
    int a = 0, b = 0;
    if (!(ss >> a)) continue;
    if (!(ss >> b))
      throw std::runtime_error("coupling map line " + std::to_string(line) +
                               ": expected `i j`");
    pairs.emplace_back(a, b);
    max_q = std::max({max_q, a, b});
  }
  return CouplingMap(max_q + 1, std::move(pairs));
}

bool CouplingMap::allowed(int a, int b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
  return allowed_[static_cast<std::size_t>(a) * n_ + b] != 0;
}

std::vector<int> CouplingMap::shortest_path(int a, int b) const {
  std::vector<int> prev(static_cast<std::size_t>(n_), -1);
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::queue<int> q;
  q.push(a);
  seen[static_cast<std::size_t>(a)] = 1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    if (u == b) break;
    for (int v : adj_[static_cast<std::size_t>(u)]) {
      if (seen[static_cast<std::size_t>(v)]) continue;
      seen[static_cast<std::size_t>(v)] = 1;
      prev[static_cast<std::size_t>(v)] = u;
      q.push(v);
    }
  }
  if (!seen[static_cast<std::size_t>(b)]) return {};
  std::vector<int> path;
  for (int v = b; v != -1; v = prev[static_cast<std::size_t>(v)])
    path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

bool CouplingMap::connected() const {
  for (int q = 1; q < n_; ++q)
    if (shortest_path(0, q).empty()) return false;
  return true;
}

GateCircuit lower(const WeightedGraph& g, const QaoaParams& params) {
  params.validate();
  GateCircuit c(g.n());
  for (int q = 0; q < g.n(); ++q) c.h(q);
  for (int j = 0; j < params.depth(); ++j) {
    const double gamma = params.gammas[static_cast<std::size_t>(j)];
    const double beta = params.betas[static_cast<std::size_t>(j)];
    for (const auto& e : g.edges()) {
      c.cnot(e.i, e.j);
      c.rz(e.j, -gamma * e.w);
      c.cnot(e.i, e.j);
    }
    for (int q = 0; q < g.n(); ++q) c.rx(q, 2.0 * beta);
  }
  return c;
}

RoutedCircuit route(const GateCircuit& c, const CouplingMap& map) {
  if (map.n() < c.n())
    throw std::invalid_argument(
        "route: coupling map has fewer qubits than the circuit");
  if (!map.connected())
    throw std::invalid_argument("route: coupling map is disconnected");

  const int n = map.n();
  std::vector<int> l2p(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) l2p[static_cast<std::size_t>(q)] = q;
  std::vector<int> p2l = l2p;

  RoutedCircuit out{GateCircuit(n), {}, 0};
  for (const Gate& g : c.gates()) {
    Gate m = g;
    m.q0 = l2p[static_cast<std::size_t>(g.q0)];
    if (!g.two_qubit()) {
      out.circuit.add(m);
      continue;
    }
    int pa = m.q0;
    const int pb = l2p[static_cast<std::size_t>(g.q1)];
    if (!map.allowed(pa, pb)) {
      const auto path = map.shortest_path(pa, pb);
      for (std::size_t k = 0; k + 2 < path.size(); ++k) {
        const int u = path[k];
        const int v = path[k + 1];
        out.circuit.swap(u, v);
        ++out.swap_count;
        const int lu = p2l[static_cast<std::size_t>(u)];
        const int lv = p2l[static_cast<std::size_t>(v)];
        std::swap(p2l[static_cast<std::size_t>(u)],
                  p2l[static_cast<std::size_t>(v)]);
        l2p[static_cast<std::size_t>(lu)] = v;
        l2p[static_cast<std::size_t>(lv)] = u;
      }
      pa = l2p[static_cast<std::size_t>(g.q0)];
    }
    m.q0 = pa;
    m.q1 = pb;
    out.circuit.add(m);
  }
  out.logical_to_physical = std::move(l2p);
  return out;
}

Statevector simulate_gates(const GateCircuit& c, int max_qubits) {
  Statevector psi = Statevector::zero(c.n(), max_qubits);
  auto a = psi.amplitudes();
  const double r = std::numbers::sqrt2 / 2.0;
  for (const Gate& g : c.gates()) {
    const std::size_t b0 = std::size_t{1} << g.q0;
    switch (g.kind) {
      case GateKind::kH:
        for (std::size_t z = 0; z < a.size(); ++z) {
          if (z & b0) continue;
          const Amplitude x = a[z], y = a[z | b0];
          a[z] = r * (x + y);
          a[z | b0] = r * (x - y);
        }
        break;
      case GateKind::kRX: {
        const double co = std::cos(g.theta / 2), si = std::sin(g.theta / 2);
        const Amplitude mis{0.0, -si};
        for (std::size_t z = 0; z < a.size(); ++z) {
          if (z & b0) continue;
          const Amplitude x = a[z], y = a[z | b0];
          a[z] = co * x + mis * y;
          a[z | b0] = mis * x + co * y;
        }
        break;
      }
      case GateKind::kRZ: {
        const Amplitude lo = std::polar(1.0, -g.theta / 2);
        const Amplitude hi = std::polar(1.0, g.theta / 2);
        for (std::size_t z = 0; z < a.size(); ++z) a[z] *= (z & b0) ? hi : lo;
        break;
      }
      case GateKind::kCNOT: {
        const std::size_t bt = std::size_t{1} << g.q1;
        for (std::size_t z = 0; z < a.size(); ++z)
          if ((z & b0) && !(z & bt)) std::swap(a[z], a[z | bt]);
        break;
      }
      case GateKind::kSWAP: {
        const std::size_t b1 = std::size_t{1} << g.q1;
        for (std::size_t z = 0; z < a.size(); ++z)
          if ((z & b0) && !(z & b1)) std::swap(a[z], a[(z ^ b0) | b1]);
        break;
      }
    }
  }
  return psi;
}

Statevector unpermute(const Statevector& physical,
                      const std::vector<int>& logical_to_physical) {
  const int n = physical.n();
  if (static_cast<int>(logical_to_physical.size()) != n)
    throw std::invalid_argument("unpermute: placement size != qubit count");
  std::vector<Amplitude> out(physical.dim());
  for (std::size_t p = 0; p < physical.dim(); ++p) {
    std::size_t l = 0;
    for (int q = 0; q < n; ++q)
      if ((p >> logical_to_physical[static_cast<std::size_t>(q)]) & 1U)
        l |= std::size_t{1} << q;
    out[l] = physical[p];
  }
  return Statevector(n, std::move(out));
}

CircuitStats stats(const GateCircuit& c) {
  CircuitStats s;
  std::vector<int> level(static_cast<std::size_t>(c.n()), 0);
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::kCNOT:
        ++s.cnot_count;
        break;
      case GateKind::kSWAP:
        ++s.swap_count;
        break;
      default:
        ++s.single_qubit_count;
        break;
    }
    int& l0 = level[static_cast<std::size_t>(g.q0)];
    if (g.two_qubit()) {
      int& l1 = level[static_cast<std::size_t>(g.q1)];
      l0 = l1 = std::max(l0, l1) + 1;
    } else {
      ++l0;
    }
    s.depth = std::max(s.depth, l0);
  }
  return s;
}

void write_circuit_text(const GateCircuit& c, std::ostream& out) {
  out << "qubits " << c.n() << '\n' << std::setprecision(17);
  for (const Gate& g : c.gates()) {
    out << to_string(g.kind) << ' ' << g.q0;
    if (g.two_qubit()) out << ' ' << g.q1;
    if (g.kind == GateKind::kRX || g.kind == GateKind::kRZ)
      out << ' ' << g.theta;
    out << '\n';
  }
}

void write_circuit_qasm(const GateCircuit& c, std::ostream& out) {
  out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << c.n() << "];\n"
      << std::setprecision(17);
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::kH:
        out << "h q[" << g.q0 << "];\n";
        break;
      case GateKind::kRX:
        out << "rx(" << g.theta << ") q[" << g.q0 << "];\n";
        break;
      case GateKind::kRZ:
        out << "rz(" << g.theta << ") q[" << g.q0 << "];\n";
        break;
      case GateKind::kCNOT:
        out << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n";
        break;
      case GateKind::kSWAP:
        out << "swap q[" << g.q0 << "],q[" << g.q1 << "];\n";
        break;
    }
  }
}

}  // namespace jetcut
