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

#include "qaoa/synthetic.hpp"

#include <cmath>
#include <stdexcept>

namespace qaoa {

CosineLandscape::CosineLandscape(std::size_t dimension, int frequency) : dim_(dimension), k_(frequency) {
  if (dim_ == 0) throw std::invalid_argument("CosineLandscape: dimension must be >= 1");
  if (k_ < 1) throw std::invalid_argument("CosineLandscape: frequency must be >= 1");
}

double CosineLandscape::value_and_gradient(std::span<const double> x, std::span<double> grad) {
  double f = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    f += 1.0 - std::cos(k_ * x[i]);
    grad[i] = k_ * std::sin(k_ * x[i]);
  }
  return f;
}

double CosineLandscape::approx_ratio(double value) const {
  return 1.0 - value / (2.0 * static_cast<double>(dim_));
}

QuadraticBowl::QuadraticBowl(std::vector<double> center) : center_(std::move(center)) {
  if (center_.empty()) throw std::invalid_argument("QuadraticBowl: dimension must be >= 1");
}

double QuadraticBowl::value_and_gradient(std::span<const double> x, std::span<double> grad) {
  double f = 0.0;
  for (std::size_t i = 0; i < center_.size(); ++i) {
    const double diff = x[i] - center_[i];
    f += diff * diff;
    grad[i] = 2.0 * diff;
  }
  return f;
}

}  // namespace qaoa
