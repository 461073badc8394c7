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
#include <cstdint>
#include <numbers>
#include <vector>

#include "qaoa/objective.hpp"
#include "qaoa/optimizer.hpp"
#include "qaoa/rng.hpp"

namespace qaoa {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Axis-aligned sampling box for the landscape.
class LandscapeSpec {
 public:
  LandscapeSpec(std::vector<double> lower, std::vector<double> upper);

  /// [0, 2pi)^d
  static LandscapeSpec full_period(std::size_t dimension);

  std::size_t dimension() const noexcept { return lower_.size(); }
  const std::vector<double>& lower() const noexcept { return lower_; }
  const std::vector<double>& upper() const noexcept { return upper_; }
  /// Product of the range widths.
  double volume() const noexcept;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

/// Knobs of the basin-radius estimator.
struct BasinOptions {
  BfgsOptions bfgs;
  /// Bisection stops once the bracket is this narrow (radians).
  double precision = 1e-3;
  /// Two descent endpoints closer than this are the same minimum.
  double eps = 1e-3;
  /// Number of orthonormal probe directions; 0 means the full dimension.
  std::size_t num_vectors = 0;
  /// Upper end of the bisection bracket.
  double max_radius = kTwoPi;
};

struct BasinRadius {
  double radius = 0.0;
  int probes = 0;
  /// Probe descents that did not converge (treated as a different minimum).
  int failed_probes = 0;
  /// False when every probe returned to the minimum; radius is then max_radius.
  bool bounded = false;
};

struct BasinEstimate {
  LocalMinimum minimum;
  std::vector<double> radii;
  double mean_radius = 0.0;
  /// Volume of the d-ball of radius mean_radius, d = dimension of the landscape.
  double volume = 0.0;
  int probes = 0;
  int failed_probes = 0;
};

struct QualityResult {
  double fraction = 0.0;
  std::size_t samples = 0;
  std::size_t converged = 0;
  /// Set when no descent converged at all (fraction is then 0).
  bool all_failed = false;
};

struct MinimaCountEstimate {
  /// V / mean(volume), clamped to >= 1.
  double estimate = 0.0;
  /// The same ratio before clamping.
  double raw_estimate = 0.0;
  double total_volume = 0.0;
  double mean_volume = 0.0;
  std::vector<BasinEstimate> basins;
  std::size_t nonconverged = 0;
};

/// Volume of a d-dimensional Euclidean ball, pi^(d/2) / Gamma(d/2 + 1) r^d.
double ball_volume(std::size_t dimension, double radius);

/// Geometric mean of strictly positive values.
double geometric_mean(const std::vector<double>& values);

/// One independent uniform draw per coordinate.
std::vector<double> sample_uniform(const LandscapeSpec& spec, RandomStream& rng);

/// `count` orthonormal vectors of dimension d (rows of the result), from the
/// QR factorization of a Gaussian matrix with the sign of R's diagonal folded
/// into Q, so the frame is Haar distributed.
std::vector<std::vector<double>> random_orthonormal(std::size_t dimension, RandomStream& rng,
                                                    std::size_t count = 0);

/// Fraction of uniform starts whose descent converges to approx_ratio >= cutoff.
/// Sample i uses the child stream rng.child({i}).
QualityResult quality_fraction(Objective& objective, const LandscapeSpec& spec, std::size_t num_samples,
                               double cutoff, const RandomStream& rng, const BfgsOptions& bfgs = {});

/// Bisects along `direction` for the nearest radius from which descent lands
/// on a different minimum.
BasinRadius basin_radius(Objective& objective, const LocalMinimum& minimum,
                         const std::vector<double>& direction, const BasinOptions& options = {});

/// Probes the minimum along random orthonormal directions, averages the radii
/// geometrically and models the basin as a ball of that radius.
BasinEstimate estimate_basin(Objective& objective, const LocalMinimum& minimum, RandomStream& rng,
                             const BasinOptions& options = {});

/// Same aggregation from already-measured radii.
BasinEstimate summarize_basin(const LocalMinimum& minimum, std::vector<double> radii, std::size_t dimension);

/// Number of minima as V / (mean basin volume). Each sample draws its start
/// and probe frame from rng.child({i}); non-converged starts are skipped.
/// Throws std::runtime_error if no sample yields a usable basin.
MinimaCountEstimate estimate_num_minima(Objective& objective, const LandscapeSpec& spec,
                                        std::size_t num_samples, const RandomStream& rng,
                                        const BasinOptions& options = {});

/// V / mean(volumes) clamped below at 1.
double minima_count_from_volumes(double total_volume, const std::vector<double>& volumes);

}  // namespace qaoa
