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

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "jetcut/graph.hpp"
#include "jetcut/maxcut.hpp"

namespace jetcut {

/// Variational schedule: gammas[j], betas[j] for layer j = 0..p-1.
struct QaoaParams {
  std::vector<double> gammas;
  std::vector<double> betas;

  int depth() const { return static_cast<int>(gammas.size()); }
  void validate() const;
  static QaoaParams zeros(int depth);

  bool operator==(const QaoaParams&) const = default;
};

using Amplitude = std::complex<double>;

/// Dense n-qubit state; amplitude index z is little-endian (qubit i = bit i).
class Statevector {
 public:
  Statevector(int n, std::vector<Amplitude> amplitudes);

  int n() const { return n_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<Amplitude> amplitudes() { return amps_; }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  Amplitude operator[](std::size_t z) const { return amps_[z]; }

  double norm() const;
  std::vector<double> probabilities() const;

  /// |0...0>
  static Statevector zero(int n, int max_qubits = kDefaultMaxQubits);
  static Statevector basis(int n, std::uint64_t z,
                           int max_qubits = kDefaultMaxQubits);

 private:
  int n_;
  std::vector<Amplitude> amps_;
};

/// |<a|b>|^2 for states of equal size.
double fidelity(const Statevector& a, const Statevector& b);

/// Throws std::length_error naming the cap when 2^n amplitudes are refused.
void check_qubit_budget(int n, int max_qubits);

/// Uniform superposition |+>^n, the starting state of every QAOA circuit.
///
/// The mixer here is e^{-i beta X} per qubit and |+>^n is its highest-energy
/// eigenstate; only the alternating structure matters, so this follows the
/// usual QAOA convention rather than a literal ground-state preparation.
Statevector prepare_plus_state(int n, int max_qubits = kDefaultMaxQubits);

/// a_z <- exp(-i gamma spectrum[z]) a_z
void apply_cost_layer(Statevector& psi, std::span<const double> spectrum,
                      double gamma);

/// RX(2 beta) on every qubit: pairs (a_{bit j = 0}, a_{bit j = 1}) are mixed
/// by [[cos b, -i sin b], [-i sin b, cos b]].
void apply_mixer_layer(Statevector& psi, double beta);

/// sum_z |a_z|^2 spectrum[z]
double expectation(const Statevector& psi, std::span<const double> spectrum);

/// |+>^n followed by cost then mixer for each layer.
Statevector run_circuit(const WeightedGraph& g, const QaoaParams& params,
                        int max_qubits = kDefaultMaxQubits);
Statevector run_circuit(std::span<const double> spectrum, int n,
                        const QaoaParams& params);

/// Measurement counts keyed by packed basis index.
using Histogram = std::map<std::uint64_t, int>;

/// `shots` computational-basis draws from |a_z|^2 using the portable Rng.
Histogram sample(const Statevector& psi, int shots, std::uint64_t seed);

enum class InitStrategy {
  kInterpolate,  // linear schedule continuation, zero-pad fallback
  kZeroPad,      // previous schedule plus an identity layer
  kGrid,         // every depth restarts from the depth-1 grid optimum
};

InitStrategy parse_init_strategy(const std::string& name);
std::string to_string(InitStrategy s);

struct QaoaConfig {
  int depth = 1;
  int shots = 1024;
  int max_qubits = kDefaultMaxQubits;
  int max_evals = 200;      // optimizer budget per depth
  double tolerance = 1e-6;  // convergence tolerance on <H_C>
  std::uint64_t seed = 0;
  InitStrategy init = InitStrategy::kInterpolate;
  int grid_size = 8;  // depth-1 grid is grid_size x grid_size

  void validate() const;
};

struct QaoaOutcome {
  QaoaParams params;
  double expectation = 0.0;
  Partition best_sample;
  double best_sample_value = 0.0;
  Histogram histogram;
  int eval_count = 0;  // objective evaluations spent up to this depth
};

/// Depth-p schedule treated as samples at (j - 1/2)/p, linearly resampled
/// at (j - 1/2)/(p + 1); positions outside the sampled range take the
/// nearest endpoint value.
QaoaParams interpolate_schedule(const QaoaParams& params);

/// Previous schedule with an appended gamma = beta = 0 layer.
QaoaParams zero_pad_schedule(const QaoaParams& params);

/// Best (gamma, beta) on the grid gamma = a/G * pi/w_max, beta = b/G * pi/2,
/// a, b = 1..G. Ties keep the first point in (a, b) order.
QaoaParams grid_search(std::span<const double> spectrum, int n, double w_max,
                       int grid_size, int* evals = nullptr);

/// Maximizes <H_C> at cfg.depth and samples the final state.
QaoaOutcome optimize(const WeightedGraph& g, const QaoaConfig& cfg);

/// Same run, returning the outcome at every depth 1..cfg.depth.
std::vector<QaoaOutcome> optimize_all_depths(const WeightedGraph& g,
                                             const QaoaConfig& cfg);

}  // namespace jetcut
