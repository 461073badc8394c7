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

#include "qaoa/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Dense>

namespace qaoa {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct Trial {
  double alpha = 0.0;
  double f = 0.0;
  double dphi = 0.0;
  VectorXd x;
  VectorXd g;
};

/// phi(alpha) = f(x0 + alpha d) together with its derivative.
class LineFunction {
 public:
  LineFunction(Objective& objective, const VectorXd& x0, const VectorXd& d, int& evaluations)
      : objective_(objective), x0_(x0), d_(d), evaluations_(evaluations) {}

  Trial operator()(double alpha) {
    Trial t;
    t.alpha = alpha;
    t.x = x0_ + alpha * d_;
    t.g.resize(t.x.size());
    t.f = objective_.value_and_gradient(std::span<const double>(t.x.data(), t.x.size()),
                                        std::span<double>(t.g.data(), t.g.size()));
    ++evaluations_;
    if (!std::isfinite(t.f) || !t.g.allFinite()) {
      std::ostringstream msg;
      msg << "objective returned a non-finite value or gradient at x = [";
      for (Eigen::Index i = 0; i < t.x.size(); ++i) msg << (i ? ", " : "") << t.x[i];
      msg << "]";
      throw NonFiniteError(msg.str());
    }
    t.dphi = t.g.dot(d_);
    return t;
  }

 private:
  Objective& objective_;
  const VectorXd& x0_;
  const VectorXd& d_;
  int& evaluations_;
};

// Minimizer of the cubic interpolating (a, fa, da) and (b, fb, db); NaN when
// the cubic has no real minimizer.
double cubic_minimizer(double a, double fa, double da, double b, double fb, double db) {
  const double d1 = da + db - 3.0 * (fa - fb) / (a - b);
  const double disc = d1 * d1 - da * db;
  if (!(disc >= 0.0)) return std::numeric_limits<double>::quiet_NaN();
  const double d2 = std::copysign(std::sqrt(disc), b - a);
  const double denom = db - da + 2.0 * d2;
  if (denom == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return b - (b - a) * (db + d2 - d1) / denom;
}

struct LineSearchResult {
  bool ok = false;
  Trial trial;
};

class StrongWolfeSearch {
 public:
  StrongWolfeSearch(LineFunction& phi, const Trial& origin, const BfgsOptions& options, int& evaluations)
      : phi_(phi), origin_(origin), opt_(options), evaluations_(evaluations),
        budget_end_(evaluations + options.max_line_search_evaluations),
        // Below this slack, differences in f are rounding noise and only the
        // derivative condition is informative.
        f_slack_(64.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(origin.f))) {}

  LineSearchResult run(double alpha_init, double alpha_max) {
    Trial prev = origin_;
    double alpha = alpha_init;
    for (int i = 0; evaluations_ < budget_end_; ++i) {
      Trial t = phi_(alpha);
      if (sufficient_decrease(t) && curvature(t)) return {true, std::move(t)};
      if (!sufficient_decrease(t) || (i > 0 && t.f >= prev.f)) return zoom(std::move(prev), std::move(t));
      if (t.dphi >= 0.0) return zoom(std::move(t), std::move(prev));
      if (alpha >= alpha_max) return {true, std::move(t)};
      prev = std::move(t);
      alpha = std::min(2.0 * alpha, alpha_max);
    }
    return {prev.alpha > 0.0, std::move(prev)};
  }

 private:
  bool sufficient_decrease(const Trial& t) const {
    return t.f <= origin_.f + opt_.c1 * t.alpha * origin_.dphi + f_slack_;
  }
  bool curvature(const Trial& t) const { return std::abs(t.dphi) <= -opt_.c2 * origin_.dphi; }

  // lo satisfies sufficient decrease with the lowest f seen; the minimizer
  // of phi lies between lo and hi.
  LineSearchResult zoom(Trial lo, Trial hi) {
    while (evaluations_ < budget_end_) {
      const double a = lo.alpha;
      const double b = hi.alpha;
      const double width = std::abs(b - a);
      if (width <= 1e-14 * std::max(1.0, std::max(std::abs(a), std::abs(b)))) break;
      double alpha = cubic_minimizer(a, lo.f, lo.dphi, b, hi.f, hi.dphi);
      const double left = std::min(a, b) + 0.1 * width;
      const double right = std::max(a, b) - 0.1 * width;
      if (!std::isfinite(alpha) || alpha < left || alpha > right) alpha = 0.5 * (a + b);

      Trial t = phi_(alpha);
      if (sufficient_decrease(t) && curvature(t)) return {true, std::move(t)};
      if (!sufficient_decrease(t) || t.f >= lo.f) {
        hi = std::move(t);
      } else {
        if (t.dphi * (hi.alpha - lo.alpha) >= 0.0) hi = std::move(lo);
        lo = std::move(t);
      }
    }
    // Fall back to the best point with sufficient decrease, if it moved.
    if (lo.alpha > 0.0 && lo.f < origin_.f) return {true, std::move(lo)};
    return {false, std::move(lo)};
  }

  LineFunction& phi_;
  const Trial& origin_;
  const BfgsOptions& opt_;
  int& evaluations_;
  int budget_end_;
  double f_slack_;
};

double inf_norm(const VectorXd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

LocalMinimum minimize(Objective& objective, std::span<const double> start, const BfgsOptions& options) {
  const auto dim = static_cast<Eigen::Index>(objective.dimension());
  if (static_cast<Eigen::Index>(start.size()) != dim) {
    throw std::invalid_argument("minimize: start has dimension " + std::to_string(start.size()) +
                                ", objective expects " + std::to_string(dim));
  }

  LocalMinimum result;
  result.start.assign(start.begin(), start.end());

  VectorXd x = Eigen::Map<const VectorXd>(start.data(), dim);
  VectorXd zero_dir = VectorXd::Zero(dim);
  Trial current;
  {
    LineFunction at(objective, x, zero_dir, result.evaluations);
    current = at(0.0);
  }

  MatrixXd inv_hessian = MatrixXd::Identity(dim, dim);
  bool identity = true;
  bool converged = inf_norm(current.g) < options.gradient_tolerance;

  while (!converged && result.iterations < options.max_iterations) {
    VectorXd d = -inv_hessian * current.g;
    double dphi0 = current.g.dot(d);
    if (!(dphi0 < 0.0)) {
      inv_hessian.setIdentity();
      identity = true;
      d = -current.g;
      dphi0 = -current.g.squaredNorm();
    }
    const double alpha_max = options.max_step / d.norm();
    const double alpha_init = std::min(1.0, alpha_max);

    Trial origin = current;
    origin.alpha = 0.0;
    origin.dphi = dphi0;
    LineFunction phi(objective, current.x, d, result.evaluations);
    StrongWolfeSearch search(phi, origin, options, result.evaluations);
    LineSearchResult ls = search.run(alpha_init, alpha_max);
    if (!ls.ok) {
      if (identity) break;  // no progress even along steepest descent
      inv_hessian.setIdentity();
      identity = true;
      continue;
    }

    const VectorXd s = ls.trial.x - current.x;
    const VectorXd y = ls.trial.g - current.g;
    current = std::move(ls.trial);
    ++result.iterations;
    if (options.observer) {
      options.observer(result.iterations, std::span<const double>(current.x.data(), current.x.size()), current.f);
    }
    if (inf_norm(current.g) < options.gradient_tolerance) {
      converged = true;
      break;
    }

    const double sy = s.dot(y);
    if (sy > std::numeric_limits<double>::epsilon() * s.norm() * y.norm()) {
      if (identity) inv_hessian *= sy / y.squaredNorm();
      const double rho = 1.0 / sy;
      const VectorXd hy = inv_hessian * y;
      const double yhy = y.dot(hy);
      inv_hessian.noalias() -= rho * (hy * s.transpose() + s * hy.transpose());
      inv_hessian.noalias() += (rho * rho * yhy + rho) * (s * s.transpose());
      identity = false;
    }
  }

  result.point.assign(current.x.data(), current.x.data() + dim);
  result.value = current.f;
  result.grad_norm = inf_norm(current.g);
  result.converged = converged;
  result.approx_ratio = objective.approx_ratio(current.f);
  return result;
}

double param_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("parameter vectors differ in dimension (" + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()) + ")");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    acc += diff * diff;
  }
  return std::sqrt(acc);
}

bool same_minimum(std::span<const double> a, std::span<const double> b, double eps) {
  return param_distance(a, b) < eps;
}

}  // namespace qaoa
