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

#include "qaoa/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qaoa {

LandscapeSpec::LandscapeSpec(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.empty()) throw std::invalid_argument("landscape needs dimension >= 1");
  if (lower_.size() != upper_.size()) throw std::invalid_argument("landscape bounds differ in length");
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (!(upper_[i] > lower_[i]) || !std::isfinite(upper_[i] - lower_[i])) {
      throw std::invalid_argument("landscape range " + std::to_string(i) + " is empty or unbounded");
    }
  }
}

LandscapeSpec LandscapeSpec::full_period(std::size_t dimension) {
  return LandscapeSpec(std::vector<double>(dimension, 0.0), std::vector<double>(dimension, kTwoPi));
}

double LandscapeSpec::volume() const noexcept {
  double v = 1.0;
  for (std::size_t i = 0; i < lower_.size(); ++i) v *= upper_[i] - lower_[i];
  return v;
}

double ball_volume(std::size_t dimension, double radius) {
  if (dimension == 0) throw std::invalid_argument("ball_volume: dimension must be >= 1");
  if (radius < 0.0) throw std::invalid_argument("ball_volume: negative radius");
  if (radius == 0.0) return 0.0;
  const double half = 0.5 * static_cast<double>(dimension);
  return std::exp(half * std::log(std::numbers::pi) - std::lgamma(half + 1.0) +
                  static_cast<double>(dimension) * std::log(radius));
}

double geometric_mean(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("geometric_mean of no values");
  double log_sum = 0.0;
  for (double v : values) {
    if (!(v > 0.0)) throw std::invalid_argument("geometric_mean needs positive values");
    log_sum += std::log(v);
  }
  return std::exp(log_sum / static_cast<double>(values.size()));
}

std::vector<double> sample_uniform(const LandscapeSpec& spec, RandomStream& rng) {
  std::vector<double> x(spec.dimension());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = rng.uniform(spec.lower()[i], spec.upper()[i]);
  return x;
}

std::vector<std::vector<double>> random_orthonormal(std::size_t dimension, RandomStream& rng,
                                                    std::size_t count) {
  if (dimension == 0) throw std::invalid_argument("random_orthonormal: dimension must be >= 1");
  if (count == 0) count = dimension;
  if (count > dimension) throw std::invalid_argument("random_orthonormal: more vectors than dimensions");
  const auto d = static_cast<Eigen::Index>(dimension);

  for (;;) {
    Eigen::MatrixXd gauss(d, d);
    // Column-major fill; the draw order is part of the reproducibility contract.
    for (Eigen::Index c = 0; c < d; ++c) {
      for (Eigen::Index r = 0; r < d; ++r) gauss(r, c) = rng.normal();
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(gauss);
    const Eigen::MatrixXd r_factor = qr.matrixQR().triangularView<Eigen::Upper>();
    bool singular = false;
    for (Eigen::Index i = 0; i < d; ++i) singular |= std::abs(r_factor(i, i)) < 1e-12;
    if (singular) continue;  // measure zero; redraw

    const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(d, d);
    std::vector<std::vector<double>> frame(count, std::vector<double>(dimension));
    for (std::size_t k = 0; k < count; ++k) {
      const double sign = r_factor(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) < 0 ? -1.0 : 1.0;
      for (std::size_t i = 0; i < dimension; ++i) {
        frame[k][i] = sign * q(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
      }
    }
    return frame;
  }
}

QualityResult quality_fraction(Objective& objective, const LandscapeSpec& spec, std::size_t num_samples,
                               double cutoff, const RandomStream& rng, const BfgsOptions& bfgs) {
  if (num_samples == 0) throw std::invalid_argument("quality_fraction: need at least one sample");
  if (spec.dimension() != objective.dimension()) {
    throw std::invalid_argument("quality_fraction: landscape and objective dimensions differ");
  }
  QualityResult result;
  result.samples = num_samples;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < num_samples; ++i) {
    RandomStream stream = rng.child({i});
    const std::vector<double> start = sample_uniform(spec, stream);
    const LocalMinimum m = minimize(objective, start, bfgs);
    if (!m.converged) continue;
    ++result.converged;
    if (m.approx_ratio >= cutoff) ++hits;
  }
  result.all_failed = result.converged == 0;
  result.fraction = static_cast<double>(hits) / static_cast<double>(num_samples);
  return result;
}

BasinRadius basin_radius(Objective& objective, const LocalMinimum& minimum,
                         const std::vector<double>& direction, const BasinOptions& options) {
  if (!minimum.converged) throw std::invalid_argument("basin_radius: minimum did not converge");
  if (direction.size() != minimum.point.size()) {
    throw std::invalid_argument("basin_radius: direction and minimum differ in dimension");
  }
  const double norm = std::sqrt(std::inner_product(direction.begin(), direction.end(), direction.begin(), 0.0));
  if (std::abs(norm - 1.0) > 1e-8) throw std::invalid_argument("basin_radius: direction must be a unit vector");
  if (!(options.precision > 0.0)) throw std::invalid_argument("basin_radius: precision must be positive");

  BasinRadius out;
  double lo = 0.0;
  double hi = options.max_radius;
  double radius = hi;
  std::vector<double> probe(direction.size());
  while (hi - lo > options.precision) {
    radius = 0.5 * (lo + hi);
    for (std::size_t i = 0; i < probe.size(); ++i) probe[i] = minimum.point[i] + radius * direction[i];
    const LocalMinimum endpoint = minimize(objective, probe, options.bfgs);
    ++out.probes;
    if (!endpoint.converged) {
      ++out.failed_probes;
      hi = radius;
      out.bounded = true;
    } else if (same_minimum(endpoint.point, minimum.point, options.eps)) {
      lo = radius;
    } else {
      hi = radius;
      out.bounded = true;
    }
  }
  out.radius = out.bounded ? radius : options.max_radius;
  return out;
}

BasinEstimate summarize_basin(const LocalMinimum& minimum, std::vector<double> radii, std::size_t dimension) {
  BasinEstimate est;
  est.minimum = minimum;
  est.radii = std::move(radii);
  est.mean_radius = geometric_mean(est.radii);
  est.volume = ball_volume(dimension, est.mean_radius);
  return est;
}

BasinEstimate estimate_basin(Objective& objective, const LocalMinimum& minimum, RandomStream& rng,
                             const BasinOptions& options) {
  const std::size_t d = objective.dimension();
  const auto frame = random_orthonormal(d, rng, options.num_vectors == 0 ? d : options.num_vectors);
  std::vector<double> radii;
  radii.reserve(frame.size());
  int probes = 0;
  int failed = 0;
  for (const auto& direction : frame) {
    const BasinRadius r = basin_radius(objective, minimum, direction, options);
    radii.push_back(r.radius);
    probes += r.probes;
    failed += r.failed_probes;
  }
  BasinEstimate est = summarize_basin(minimum, std::move(radii), d);
  est.probes = probes;
  est.failed_probes = failed;
  return est;
}

double minima_count_from_volumes(double total_volume, const std::vector<double>& volumes) {
  if (volumes.empty()) throw std::runtime_error("no basin volumes to aggregate");
  const double mean = std::accumulate(volumes.begin(), volumes.end(), 0.0) / static_cast<double>(volumes.size());
  return std::max(1.0, total_volume / mean);
}

MinimaCountEstimate estimate_num_minima(Objective& objective, const LandscapeSpec& spec,
                                        std::size_t num_samples, const RandomStream& rng,
                                        const BasinOptions& options) {
  if (num_samples == 0) throw std::invalid_argument("estimate_num_minima: need at least one sample");
  if (spec.dimension() != objective.dimension()) {
    throw std::invalid_argument("estimate_num_minima: landscape and objective dimensions differ");
  }
  MinimaCountEstimate out;
  out.total_volume = spec.volume();
  std::vector<double> volumes;
  for (std::size_t i = 0; i < num_samples; ++i) {
    RandomStream stream = rng.child({i});
    const std::vector<double> start = sample_uniform(spec, stream);
    LocalMinimum m = minimize(objective, start, options.bfgs);
    if (!m.converged) {
      ++out.nonconverged;
      continue;
    }
    out.basins.push_back(estimate_basin(objective, m, stream, options));
    volumes.push_back(out.basins.back().volume);
  }
  if (volumes.empty()) {
    throw std::runtime_error("estimate_num_minima: none of the " + std::to_string(num_samples) +
                             " descents converged; no basin could be probed");
  }
  out.mean_volume = std::accumulate(volumes.begin(), volumes.end(), 0.0) / static_cast<double>(volumes.size());
  out.raw_estimate = out.total_volume / out.mean_volume;
  out.estimate = std::max(1.0, out.raw_estimate);
  return out;
}

}  // namespace qaoa
