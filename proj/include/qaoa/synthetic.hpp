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

#include <vector>

#include "qaoa/objective.hpp"

namespace qaoa {

/// sum_i (1 - cos(k x_i)). On [0, 2pi)^d it has exactly k^d minima, at the
/// points with every coordinate a multiple of 2pi/k; each basin is the
/// axis-aligned cube of side 2pi/k centred on its minimum.
class CosineLandscape final : public Objective {
 public:
  CosineLandscape(std::size_t dimension, int frequency);

  std::size_t dimension() const override { return dim_; }
  double value_and_gradient(std::span<const double> x, std::span<double> grad) override;
  /// 1 at a minimum, 0 at a maximum.
  double approx_ratio(double value) const override;

  int frequency() const noexcept { return k_; }

 private:
  std::size_t dim_;
  int k_;
};

/// ||x - c||^2: a single basin covering all of R^d.
class QuadraticBowl final : public Objective {
 public:
  explicit QuadraticBowl(std::vector<double> center);

  std::size_t dimension() const override { return center_.size(); }
  double value_and_gradient(std::span<const double> x, std::span<double> grad) override;
  double approx_ratio(double value) const override { return 1.0 / (1.0 + value); }

  const std::vector<double>& center() const noexcept { return center_; }

 private:
  std::vector<double> center_;
};

}  // namespace qaoa
