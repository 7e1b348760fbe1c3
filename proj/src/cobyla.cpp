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

#include "jetcut/cobyla.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jetcut::optim {

namespace {

// Simplex acceptability and step constants from Powell's COBYLA.
constexpr double kAlpha = 0.25;  // min vertex-to-face distance, in units of rho
constexpr double kBeta = 2.1;   // max vertex-to-pivot distance, in units of rho
constexpr double kGamma = 0.5;  // geometry step length, in units of rho
constexpr double kDelta = 1.1;  // edge length beyond which a vertex is dropped

using Eigen::MatrixXd;
using Eigen::VectorXd;

class Simplex {
 public:
  Simplex(const Objective& f, VectorXd x0, double rho, int max_evals)
      : f_(f),
        max_evals_(max_evals),
        n_(x0.size()),
        pivot_(std::move(x0)),
        edges_(MatrixXd::Zero(n_, n_)),
        values_(VectorXd::Constant(n_, HUGE_VAL)) {
    f0_ = eval(pivot_);
    // A vertex that improves on the pivot takes its place at once, so later
    // vertices are laid out around the better point.
    for (Eigen::Index i = 0; i < n_ && !exhausted(); ++i) {
      VectorXd x = pivot_;
      x(i) += rho;
      const double v = eval(x);
      if (v < f0_) {
        values_(i) = f0_;
        f0_ = v;
        pivot_ = x;
        edges_.col(i).head(i + 1).setConstant(-rho);
      } else {
        values_(i) = v;
        edges_(i, i) = rho;
      }
    }
  }

  bool exhausted() const { return evals_ >= max_evals_; }
  int evals() const { return evals_; }
  const VectorXd& pivot() const { return pivot_; }
  double f0() const { return f0_; }

  double eval(const VectorXd& x) {
    ++evals_;
    const double v = f_(std::span<const double>(x.data(), x.size()));
    return std::isfinite(v) ? v : HUGE_VAL;
  }

  // Makes the lowest vertex the pivot; edge vectors are re-expressed
  // relative to it.
  void repivot() {
    Eigen::Index best = -1;
    double fbest = f0_;
    for (Eigen::Index i = 0; i < n_; ++i)
      if (values_(i) < fbest) {
        fbest = values_(i);
        best = i;
      }
    if (best < 0) return;
    const VectorXd shift = edges_.row(best).transpose();
    pivot_ += shift;
    for (Eigen::Index i = 0; i < n_; ++i)
      if (i != best) edges_.row(i) -= shift.transpose();
    edges_.row(best) = -shift.transpose();
    std::swap(values_(best), f0_);
  }

  // Inverse of the edge matrix; false when the simplex has collapsed.
  bool invert(MatrixXd& inv) const {
    Eigen::FullPivLU<MatrixXd> lu(edges_);
    if (!lu.isInvertible()) return false;
    inv = lu.inverse();
    return true;
  }

  Eigen::Index n() const { return n_; }
  MatrixXd& edges() { return edges_; }
  VectorXd& values() { return values_; }

 private:
  const Objective& f_;
  int max_evals_;
  int evals_ = 0;
  Eigen::Index n_;
  VectorXd pivot_;
  MatrixXd edges_;   // row i: vertex i minus pivot
  VectorXd values_;  // f at vertex i
  double f0_ = 0.0;
};

}  // namespace

CobylaResult minimize(const Objective& f, std::vector<double> x0,
                      const CobylaOptions& opts) {
  if (x0.empty()) throw std::invalid_argument("cobyla: empty parameter vector");
  if (!(opts.rho_begin > 0.0) || !(opts.rho_end > 0.0) ||
      opts.rho_end > opts.rho_begin)
    throw std::invalid_argument("cobyla: need 0 < rho_end <= rho_begin");
  if (opts.max_evals < 1)
    throw std::invalid_argument("cobyla: max_evals must be positive");

  const VectorXd start = Eigen::Map<const VectorXd>(x0.data(), x0.size());
  double rho = opts.rho_begin;
  Simplex s(f, start, rho, opts.max_evals);
  const Eigen::Index n = s.n();

  bool converged = false;
  bool after_trial = true;  // last action was a trial step or a rho cut
  MatrixXd inv;

  while (!s.exhausted()) {
    s.repivot();
    auto& edges = s.edges();
    auto& values = s.values();
    const bool regular = s.invert(inv);
    if (!regular) {
      // Collapsed simplex: restart the edge set along the axes.
      edges = rho * MatrixXd::Identity(n, n);
      for (Eigen::Index i = 0; i < n && !s.exhausted(); ++i)
        values(i) = s.eval(s.pivot() + edges.row(i).transpose());
      continue;
    }

    VectorXd eta(n), sigma(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      eta(i) = edges.row(i).norm();
      sigma(i) = 1.0 / inv.col(i).norm();
    }
    const bool acceptable =
        eta.maxCoeff() <= kBeta * rho && sigma.minCoeff() >= kAlpha * rho;

    const VectorXd df = values.array() - s.f0();
    const VectorXd grad = inv * df;

    if (!after_trial && !acceptable) {
      // Replace the vertex that spoils the geometry by a point at distance
      // gamma*rho from the pivot, perpendicular to the opposite face.
      Eigen::Index j;
      if (eta.maxCoeff(&j) <= kBeta * rho) sigma.minCoeff(&j);
      VectorXd dx = kGamma * rho * sigma(j) * inv.col(j);
      if (grad.dot(dx) > 0.0) dx = -dx;
      values(j) = s.eval(s.pivot() + dx);
      edges.row(j) = dx.transpose();
      continue;
    }

    bool improved = false;
    const double gnorm = grad.norm();
    if (gnorm > 0.0) {
      const VectorXd step = -(rho / gnorm) * grad;
      const double predicted = rho * gnorm;
      const double ft = s.eval(s.pivot() + step);
      const double actual = s.f0() - ft;

      // Pick the vertex whose replacement by the trial point keeps the
      // simplex volume largest; prefer dropping vertices far from the pivot.
      const VectorXd lambda = inv.transpose() * step;
      Eigen::Index drop = -1;
      double best = actual > 0.0 ? 0.0 : 1.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (std::abs(lambda(j)) > best) {
          best = std::abs(lambda(j));
          drop = j;
        }
      }
      double edge_max = kDelta * rho;
      for (Eigen::Index j = 0; j < n; ++j) {
        const double sigbar = std::abs(lambda(j)) * sigma(j);
        if (sigbar >= kAlpha * rho || sigbar >= sigma(j)) {
          const double dist =
              actual > 0.0 ? (step - edges.row(j).transpose()).norm() : eta(j);
          if (dist > edge_max) {
            edge_max = dist;
            drop = j;
          }
        }
      }
      if (drop >= 0) {
        edges.row(drop) = step.transpose();
        values(drop) = ft;
      }
      improved = drop >= 0 && actual > 0.0 && actual >= 0.1 * predicted;
    }
    if (improved) {
      after_trial = true;
      continue;
    }
    if (!acceptable) {
      // The model failed on a poor simplex: fix the geometry first.
      after_trial = false;
      continue;
    }

    // Geometry is fine and the model still failed: shrink the region.
    if (rho <= opts.rho_end) {
      converged = true;
      break;
    }
    rho *= 0.5;
    if (rho <= 1.5 * opts.rho_end) rho = opts.rho_end;
    after_trial = true;
    if ((s.values().array() - s.f0()).abs().maxCoeff() <= opts.ftol) {
      converged = true;
      break;
    }
  }

  s.repivot();
  CobylaResult r;
  r.x.assign(s.pivot().data(), s.pivot().data() + s.pivot().size());
  r.f = s.f0();
  r.evals = s.evals();
  r.converged = converged;
  return r;
}

}  // namespace jetcut::optim
