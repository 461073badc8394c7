// Copyright 2026 The qaoa-landscape Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "qaoa/objective.hpp"

namespace qaoa {

/// Thrown when the objective returns NaN/inf at an evaluated point.
class NonFiniteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BfgsOptions {
  /// Convergence threshold on the gradient infinity-norm.
  double gradient_tolerance = 1e-8;
  int max_iterations = 1000;
  /// Sufficient-decrease and curvature constants of the strong Wolfe conditions.
  double c1 = 1e-4;
  double c2 = 0.9;
  /// Upper bound on the Euclidean length of any trial step. Keeps a single
  /// line search from leaping across several basins of attraction.
  double max_step = 1.0;
  int max_line_search_evaluations = 40;
  /// Called with (iteration, x, f) after every accepted step.
  std::function<void(int, std::span<const double>, double)> observer;
};

struct LocalMinimum {
  std::vector<double> point;
  double value = 0.0;
  double approx_ratio = 0.0;
  /// Infinity-norm of the gradient at `point`.
  double grad_norm = 0.0;
  std::vector<double> start;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

/// Full-memory BFGS with a strong Wolfe line search. Deterministic: the same
/// start always reproduces the same iterates on a given build.
LocalMinimum minimize(Objective& objective, std::span<const double> start,
                      const BfgsOptions& options = {});

/// Plain Euclidean distance, no periodic wrap-around.
double param_distance(std::span<const double> a, std::span<const double> b);

/// ||a - b|| < eps
bool same_minimum(std::span<const double> a, std::span<const double> b, double eps);

}  // namespace qaoa
