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

#include <functional>
#include <span>
#include <vector>

namespace jetcut::optim {

struct CobylaOptions {
  double rho_begin = 0.2;  // initial trust-region radius / simplex edge
  double rho_end = 1e-7;   // final radius
  double ftol = 1e-6;  // stop once simplex values agree to this at a radius cut
  int max_evals = 200;
};

struct CobylaResult {
  std::vector<double> x;
  double f = 0.0;
  int evals = 0;
  bool converged = false;  // false when the evaluation budget ran out
};

using Objective = std::function<double(std::span<const double>)>;

/// Derivative-free minimization by linear approximation (unconstrained
/// COBYLA).
///
/// Keeps a simplex of n+1 evaluated points, fits the linear interpolant
/// through them and steps to its minimizer on the trust-region sphere of
/// radius rho. A step that achieves less than a tenth of the predicted
/// decrease either triggers a geometry repair of the simplex (when a vertex
/// is too far from the pivot or too close to the opposite face) or halves
/// rho. The returned point is the best one evaluated, so the result is never
/// worse than `x0`.
CobylaResult minimize(const Objective& f, std::vector<double> x0,
                      const CobylaOptions& opts = {});

}  // namespace jetcut::optim
