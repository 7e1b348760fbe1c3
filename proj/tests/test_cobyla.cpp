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

#include <cmath>

#include "doctest.h"
#include "jetcut/cobyla.hpp"

using jetcut::optim::CobylaOptions;
using jetcut::optim::minimize;

TEST_CASE("cobyla minimizes a shifted quadratic") {
  auto f = [](std::span<const double> x) {
    return (x[0] - 1.0) * (x[0] - 1.0) + 4.0 * (x[1] + 0.5) * (x[1] + 0.5);
  };
  CobylaOptions opts;
  opts.rho_begin = 0.5;
  opts.rho_end = 1e-8;
  opts.ftol = 1e-14;
  opts.max_evals = 2000;
  const auto r = minimize(f, {0.0, 0.0}, opts);
  CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(r.x[1] == doctest::Approx(-0.5).epsilon(1e-5));
  CHECK(r.f < 1e-9);
  CHECK(r.converged);
}

TEST_CASE("cobyla handles the Rosenbrock valley") {
  auto f = [](std::span<const double> x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
  };
  CobylaOptions opts;
  opts.rho_begin = 0.5;
  opts.rho_end = 1e-9;
  opts.ftol = 1e-16;
  opts.max_evals = 20000;
  const auto r = minimize(f, {-1.2, 1.0}, opts);
  CHECK(r.f < 1e-6);
}

TEST_CASE("cobyla respects the evaluation budget and never worsens the start") {
  int calls = 0;
  auto f = [&](std::span<const double> x) {
    ++calls;
    double s = 0;
    for (double v : x) s += std::cos(3 * v) + 0.1 * v * v;
    return s;
  };
  CobylaOptions opts;
  opts.max_evals = 37;
  const std::vector<double> x0{0.3, -0.2, 1.0, 0.7};
  const double f0 = f(x0);
  calls = 0;
  const auto r = minimize(f, x0, opts);
  CHECK(calls == r.evals);
  CHECK(r.evals <= 37);
  CHECK(r.f <= f0);
}

TEST_CASE("cobyla stops at a flat objective") {
  auto f = [](std::span<const double>) { return 2.5; };
  const auto r = minimize(f, {0.0, 0.0, 0.0});
  CHECK(r.f == 2.5);
  CHECK(r.converged);
  CHECK(r.evals < 200);
}

TEST_CASE("cobyla argument validation") {
  auto f = [](std::span<const double>) { return 0.0; };
  CHECK_THROWS(minimize(f, {}));
  CobylaOptions bad;
  bad.rho_end = 1.0;
  bad.rho_begin = 0.1;
  CHECK_THROWS(minimize(f, {1.0}, bad));
}
