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

#include "jetcut/qaoa.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "jetcut/cobyla.hpp"
#include "jetcut/rng.hpp"

namespace jetcut {

namespace {

constexpr double kPi = std::numbers::pi;

double weight_scale(double w_max) { return w_max > 0.0 ? w_max : 1.0; }

// Optimizer coordinates: (gamma_j * w_max, beta_j), both O(1).
std::vector<double> pack(const QaoaParams& p, double scale) {
  std::vector<double> x;
  x.reserve(2 * p.gammas.size());
  for (double g : p.gammas) x.push_back(g * scale);
  x.insert(x.end(), p.betas.begin(), p.betas.end());
  return x;
}

QaoaParams unpack(std::span<const double> x, double scale) {
  const std::size_t p = x.size() / 2;
  QaoaParams out;
  out.gammas.reserve(p);
  for (std::size_t j = 0; j < p; ++j) out.gammas.push_back(x[j] / scale);
  out.betas.assign(x.begin() + static_cast<std::ptrdiff_t>(p), x.end());
  return out;
}

double score(std::span<const double> spectrum, int n, const QaoaParams& p) {
  return expectation(run_circuit(spectrum, n, p), spectrum);
}

QaoaOutcome finish(std::span<const double> spectrum, int n, QaoaParams params,
                   double value, int evals, const QaoaConfig& cfg) {
  QaoaOutcome out;
  const Statevector psi = run_circuit(spectrum, n, params);
  out.params = std::move(params);
  out.expectation = value;
  out.histogram = sample(psi, cfg.shots, cfg.seed);
  out.eval_count = evals;

  // Map order is ascending index, so strict '>' keeps the lowest index on ties.
  std::uint64_t best_z = out.histogram.begin()->first;
  double best = spectrum[best_z];
  for (const auto& [z, count] : out.histogram) {
    if (spectrum[z] > best) {
      best = spectrum[z];
      best_z = z;
    }
  }
  out.best_sample = Partition::from_index(best_z, n);
  out.best_sample_value = best;
  return out;
}

}  // namespace

void QaoaParams::validate() const {
  if (gammas.size() != betas.size())
    throw std::invalid_argument("qaoa params: gamma and beta counts differ");
  for (double v : gammas)
    if (!std::isfinite(v))
      throw std::invalid_argument("qaoa params: non-finite gamma");
  for (double v : betas)
    if (!std::isfinite(v))
      throw std::invalid_argument("qaoa params: non-finite beta");
}

QaoaParams QaoaParams::zeros(int depth) {
  if (depth < 0) throw std::invalid_argument("qaoa params: negative depth");
  const auto p = static_cast<std::size_t>(depth);
  return {std::vector<double>(p, 0.0), std::vector<double>(p, 0.0)};
}

Statevector::Statevector(int n, std::vector<Amplitude> amplitudes)
    : n_(n), amps_(std::move(amplitudes)) {
  if (n < 0 || n >= 63 || amps_.size() != (std::size_t{1} << n))
    throw std::invalid_argument("statevector: size is not 2^n");
}

double Statevector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

std::vector<double> Statevector::probabilities() const {
  std::vector<double> p(amps_.size());
  std::transform(amps_.begin(), amps_.end(), p.begin(),
                 [](const Amplitude& a) { return std::norm(a); });
  return p;
}

void check_qubit_budget(int n, int max_qubits) {
  if (n < 0) throw std::invalid_argument("negative qubit count");
  if (n > max_qubits || n >= 63) {
    std::ostringstream msg;
    msg << n << " qubits exceeds the statevector cap of " << max_qubits
        << " qubits (2^" << n << " amplitudes = "
        << (n < 63 ? static_cast<double>(std::uint64_t{16} << n) / (1 << 20)
                   : HUGE_VAL)
        << " MiB)";
    throw std::length_error(msg.str());
  }
}

Statevector Statevector::zero(int n, int max_qubits) {
  return basis(n, 0, max_qubits);
}

Statevector Statevector::basis(int n, std::uint64_t z, int max_qubits) {
  check_qubit_budget(n, max_qubits);
  std::vector<Amplitude> a(std::size_t{1} << n, Amplitude{0.0, 0.0});
  if (z >= a.size())
    throw std::invalid_argument("statevector: basis index out of range");
  a[z] = 1.0;
  return Statevector(n, std::move(a));
}

double fidelity(const Statevector& a, const Statevector& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("fidelity: size mismatch");
  Amplitude overlap{0.0, 0.0};
  for (std::size_t z = 0; z < a.dim(); ++z) overlap += std::conj(a[z]) * b[z];
  return std::norm(overlap);
}

Statevector prepare_plus_state(int n, int max_qubits) {
  check_qubit_budget(n, max_qubits);
  const std::size_t dim = std::size_t{1} << n;
  const double amp = std::pow(2.0, -0.5 * n);
  return Statevector(n, std::vector<Amplitude>(dim, Amplitude{amp, 0.0}));
}

void apply_cost_layer(Statevector& psi, std::span<const double> spectrum,
                      double gamma) {
  if (spectrum.size() != psi.dim())
    throw std::invalid_argument("cost layer: spectrum length != 2^n");
  auto a = psi.amplitudes();
  for (std::size_t z = 0; z < a.size(); ++z)
    a[z] *= std::polar(1.0, -gamma * spectrum[z]);
}

void apply_mixer_layer(Statevector& psi, double beta) {
  const double c = std::cos(beta);
  const double s = std::sin(beta);
  const Amplitude mis{0.0, -s};
  auto a = psi.amplitudes();
  for (int q = 0; q < psi.n(); ++q) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t z = 0; z < a.size(); ++z) {
      if (z & bit) continue;
      const Amplitude a0 = a[z];
      const Amplitude a1 = a[z | bit];
      a[z] = c * a0 + mis * a1;
      a[z | bit] = mis * a0 + c * a1;
    }
  }
}

double expectation(const Statevector& psi, std::span<const double> spectrum) {
  if (spectrum.size() != psi.dim())
    throw std::invalid_argument("expectation: spectrum length != 2^n");
  double e = 0.0;
  for (std::size_t z = 0; z < spectrum.size(); ++z)
    e += std::norm(psi[z]) * spectrum[z];
  return e;
}

Statevector run_circuit(std::span<const double> spectrum, int n,
                        const QaoaParams& params) {
  params.validate();
  Statevector psi = prepare_plus_state(n, n);
  for (int j = 0; j < params.depth(); ++j) {
    apply_cost_layer(psi, spectrum, params.gammas[static_cast<std::size_t>(j)]);
    apply_mixer_layer(psi, params.betas[static_cast<std::size_t>(j)]);
  }
  return psi;
}

Statevector run_circuit(const WeightedGraph& g, const QaoaParams& params,
                        int max_qubits) {
  check_qubit_budget(g.n(), max_qubits);
  const auto spectrum = cost_spectrum(g, max_qubits);
  return run_circuit(spectrum, g.n(), params);
}

Histogram sample(const Statevector& psi, int shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("sample: shots must be >= 1");
  std::vector<double> cumulative = psi.probabilities();
  std::partial_sum(cumulative.begin(), cumulative.end(), cumulative.begin());
  const double total = cumulative.back();
  if (!(total > 0.0)) throw std::invalid_argument("sample: zero-norm state");

  Rng rng(seed);
  Histogram h;
  for (int s = 0; s < shots; ++s) {
    const double r = rng.uniform() * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
    if (it == cumulative.end()) --it;
    ++h[static_cast<std::uint64_t>(it - cumulative.begin())];
  }
  return h;
}

InitStrategy parse_init_strategy(const std::string& name) {
  if (name == "interpolate") return InitStrategy::kInterpolate;
  if (name == "zero-pad") return InitStrategy::kZeroPad;
  if (name == "grid") return InitStrategy::kGrid;
  throw std::invalid_argument("unknown init strategy '" + name +
                              "' (expected interpolate, zero-pad or grid)");
}

std::string to_string(InitStrategy s) {
  switch (s) {
    case InitStrategy::kInterpolate:
      return "interpolate";
    case InitStrategy::kZeroPad:
      return "zero-pad";
    case InitStrategy::kGrid:
      return "grid";
  }
  return "?";
}

void QaoaConfig::validate() const {
  if (depth < 1) throw std::invalid_argument("qaoa config: depth must be >= 1");
  if (shots < 1) throw std::invalid_argument("qaoa config: shots must be >= 1");
  if (max_evals < 1)
    throw std::invalid_argument("qaoa config: evaluation budget must be >= 1");
  if (!(tolerance > 0.0))
    throw std::invalid_argument("qaoa config: tolerance must be positive");
  if (grid_size < 1)
    throw std::invalid_argument("qaoa config: grid size must be >= 1");
}

QaoaParams interpolate_schedule(const QaoaParams& params) {
  params.validate();
  const int p = params.depth();
  if (p == 0) return QaoaParams::zeros(1);
  auto resample = [p](const std::vector<double>& v) {
    std::vector<double> out(static_cast<std::size_t>(p + 1));
    for (int j = 0; j <= p; ++j) {
      // Target position (j + 1/2)/(p + 1) in units of the old spacing 1/p,
      // shifted so old sample i sits at coordinate i.
      const double t = (j + 0.5) * p / (p + 1.0) - 0.5;
      if (t <= 0.0) {
        out[static_cast<std::size_t>(j)] = v.front();
      } else if (t >= p - 1) {
        out[static_cast<std::size_t>(j)] = v.back();
      } else {
        const auto i = static_cast<std::size_t>(std::floor(t));
        const double f = t - static_cast<double>(i);
        out[static_cast<std::size_t>(j)] = (1.0 - f) * v[i] + f * v[i + 1];
      }
    }
    return out;
  };
  return {resample(params.gammas), resample(params.betas)};
}

QaoaParams zero_pad_schedule(const QaoaParams& params) {
  params.validate();
  QaoaParams out = params;
  out.gammas.push_back(0.0);
  out.betas.push_back(0.0);
  return out;
}

QaoaParams grid_search(std::span<const double> spectrum, int n, double w_max,
                       int grid_size, int* evals) {
  if (grid_size < 1) throw std::invalid_argument("grid_search: empty grid");
  const double gamma_max = kPi / weight_scale(w_max);
  QaoaParams best{{0.0}, {0.0}};
  double best_value = -HUGE_VAL;
  for (int a = 1; a <= grid_size; ++a) {
    for (int b = 1; b <= grid_size; ++b) {
      const QaoaParams trial{{gamma_max * a / grid_size},
                             {0.5 * kPi * b / grid_size}};
      const double v = score(spectrum, n, trial);
      if (evals) ++*evals;
      if (v > best_value) {
        best_value = v;
        best = trial;
      }
    }
  }
  return best;
}

std::vector<QaoaOutcome> optimize_all_depths(const WeightedGraph& g,
                                             const QaoaConfig& cfg) {
  cfg.validate();
  const int n = g.n();
  check_qubit_budget(n, cfg.max_qubits);
  const auto spectrum = cost_spectrum(g, cfg.max_qubits);
  const double scale = weight_scale(g.max_weight());

  optim::CobylaOptions opts;
  opts.max_evals = cfg.max_evals;
  opts.ftol = cfg.tolerance;
  // Simplex edge equal to the grid's beta spacing.
  opts.rho_begin = 0.5 * kPi / cfg.grid_size;
  opts.rho_end = std::min(opts.rho_begin, 1e-7);

  auto objective = [&](std::span<const double> x) {
    return -score(spectrum, n, unpack(x, scale));
  };

  int evals = 0;
  const QaoaParams grid_best =
      grid_search(spectrum, n, g.max_weight(), cfg.grid_size, &evals);

  std::vector<QaoaOutcome> outcomes;
  QaoaParams current = grid_best;
  for (int p = 1; p <= cfg.depth; ++p) {
    QaoaParams seed;
    if (p == 1) {
      seed = grid_best;
    } else if (cfg.init == InitStrategy::kGrid) {
      // Same total evolution as the grid optimum, split evenly over p layers.
      seed.gammas.assign(static_cast<std::size_t>(p), grid_best.gammas[0] / p);
      seed.betas.assign(static_cast<std::size_t>(p), grid_best.betas[0] / p);
    } else if (cfg.init == InitStrategy::kZeroPad) {
      seed = zero_pad_schedule(current);
    } else {
      QaoaParams interp = interpolate_schedule(current);
      QaoaParams padded = zero_pad_schedule(current);
      const double vi = score(spectrum, n, interp);
      const double vz = score(spectrum, n, padded);
      evals += 2;
      seed = vi > vz ? std::move(interp) : std::move(padded);
    }

    const auto r = optim::minimize(objective, pack(seed, scale), opts);
    evals += r.evals;
    current = unpack(r.x, scale);
    outcomes.push_back(finish(spectrum, n, current, -r.f, evals, cfg));
  }
  return outcomes;
}

QaoaOutcome optimize(const WeightedGraph& g, const QaoaConfig& cfg) {
  auto all = optimize_all_depths(g, cfg);
  return std::move(all.back());
}

}  // namespace jetcut
