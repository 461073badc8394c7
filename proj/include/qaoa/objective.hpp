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
#include <span>

namespace qaoa {

/// A differentiable function on R^d to be minimized. Implementations may
/// keep scratch buffers, so an instance must not be shared across threads.
class Objective {
 public:
  virtual ~Objective() = default;

  virtual std::size_t dimension() const = 0;

  /// Returns f(x) and writes grad f(x) into `grad` (size dimension()).
  virtual double value_and_gradient(std::span<const double> x, std::span<double> grad) = 0;

  /// Maps an objective value to a quality score in [0, 1]. For QAOA this is
  /// the approximation ratio of the negated expectation.
  virtual double approx_ratio(double value) const = 0;
};

}  // namespace qaoa
