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

// Test-only reference simulator. Builds the full 2^n x 2^n operators from
// Pauli Kronecker products and exponentiates them with Eigen's matrix
// exponential, sharing no code with the statevector engine.

#include <Eigen/Dense>
#include <complex>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>
#include <vector>

#include "jetcut/graph.hpp"
#include "jetcut/qaoa.hpp"

namespace jetcut::testing {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

inline CMat pauli_x() {
  CMat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline CMat pauli_z() {
  CMat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline CMat hadamard() {
  CMat m(2, 2);
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}

// Embeds single-qubit operators: ops[q] acts on qubit q (little-endian, so
// qubit 0 is the rightmost Kronecker factor).
inline CMat tensor(const std::vector<CMat>& ops) {
  CMat out = CMat::Identity(1, 1);
  for (auto it = ops.rbegin(); it != ops.rend(); ++it)
    out = Eigen::kroneckerProduct(out, *it).eval();
  return out;
}

inline CMat on_qubits(int n, const std::vector<std::pair<int, CMat>>& placed) {
  std::vector<CMat> ops(static_cast<std::size_t>(n), CMat::Identity(2, 2));
  for (const auto& [q, m] : placed) ops[static_cast<std::size_t>(q)] = m;
  return tensor(ops);
}

// 1/2 sum_E w (I - Z_i Z_j)
inline CMat cost_hamiltonian(const WeightedGraph& g) {
  const int n = g.n();
  const auto dim = Eigen::Index{1} << n;
  CMat h = CMat::Zero(dim, dim);
  for (const auto& e : g.edges()) {
    const CMat zz = on_qubits(n, {{e.i, pauli_z()}, {e.j, pauli_z()}});
    h += 0.5 * e.w * (CMat::Identity(dim, dim) - zz);
  }
  return h;
}

// sum_j X_j
inline CMat mixer_hamiltonian(int n) {
  const auto dim = Eigen::Index{1} << n;
  CMat h = CMat::Zero(dim, dim);
  for (int q = 0; q < n; ++q) h += on_qubits(n, {{q, pauli_x()}});
  return h;
}

inline CVec dense_qaoa_state(const WeightedGraph& g, const QaoaParams& p) {
  const int n = g.n();
  const auto dim = Eigen::Index{1} << n;
  CVec psi = CVec::Zero(dim);
  psi(0) = 1.0;
  psi =
      tensor(std::vector<CMat>(static_cast<std::size_t>(n), hadamard())) * psi;
  const CMat hc = cost_hamiltonian(g);
  const CMat hm = mixer_hamiltonian(n);
  const std::complex<double> mi{0.0, -1.0};
  for (int j = 0; j < p.depth(); ++j) {
    const CMat uc = (mi * p.gammas[static_cast<std::size_t>(j)] * hc).exp();
    const CMat um = (mi * p.betas[static_cast<std::size_t>(j)] * hm).exp();
    psi = um * (uc * psi);
  }
  return psi;
}

inline double dense_expectation(const WeightedGraph& g, const CVec& psi) {
  return (psi.adjoint() * cost_hamiltonian(g) * psi)(0, 0).real();
}

// max_z |a_z - e^{i phi} b_z| after removing the relative global phase.
inline double max_diff_up_to_phase(const CVec& a, const Statevector& b) {
  std::complex<double> overlap{0.0, 0.0};
  for (Eigen::Index z = 0; z < a.size(); ++z)
    overlap += std::conj(b[static_cast<std::size_t>(z)]) * a(z);
  const std::complex<double> phase =
      std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : 1.0;
  double m = 0.0;
  for (Eigen::Index z = 0; z < a.size(); ++z)
    m = std::max(m, std::abs(a(z) - phase * b[static_cast<std::size_t>(z)]));
  return m;
}

}  // namespace jetcut::testing
