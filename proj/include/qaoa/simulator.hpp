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

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "qaoa/graph.hpp"
#include "qaoa/objective.hpp"

namespace qaoa {

using Complex = std::complex<double>;

/// QAOA angles stored flat as (gamma_1..gamma_p, beta_1..beta_p).
class ParamVector {
 public:
  /// All-zero angles for p rounds.
  explicit ParamVector(int p);
  /// From a flat vector of even length 2p.
  explicit ParamVector(std::vector<double> flat);
  ParamVector(std::span<const double> gammas, std::span<const double> betas);

  int rounds() const noexcept { return static_cast<int>(flat_.size() / 2); }
  std::size_t dimension() const noexcept { return flat_.size(); }

  double gamma(int k) const { return flat_[k]; }
  double beta(int k) const { return flat_[rounds() + k]; }
  double& gamma(int k) { return flat_[k]; }
  double& beta(int k) { return flat_[rounds() + k]; }

  std::span<const double> flat() const noexcept { return flat_; }
  std::span<double> flat() noexcept { return flat_; }

  bool operator==(const ParamVector&) const = default;

 private:
  std::vector<double> flat_;
};

class StateVector {
 public:
  StateVector(int n, std::vector<Complex> amplitudes);

  int num_qubits() const noexcept { return n_; }
  std::size_t size() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  std::span<Complex> amplitudes() noexcept { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }
  Complex& operator[](std::size_t i) { return amps_[i]; }

  double norm_squared() const noexcept;

 private:
  int n_;
  std::vector<Complex> amps_;
};

/// |+>^n, every amplitude 2^(-n/2).
StateVector plus_state(int n, int max_qubits = kDefaultMaxQubits);

/// Computational basis state |x>.
StateVector basis_state(int n, std::size_t x, int max_qubits = kDefaultMaxQubits);

/// In place: amplitude[x] *= exp(-i gamma C(x)).
void apply_phase(StateVector& state, const CostTable& table, double gamma);

/// In place: exp(-i beta X) on every qubit.
void apply_mixer(StateVector& state, double beta);

/// exp(-i b_p H_M) exp(-i g_p H_C) ... exp(-i b_1 H_M) exp(-i g_1 H_C) |+>^n
StateVector evolve(const CostTable& table, const ParamVector& params);

/// <psi|H_C|psi>
double expectation(const StateVector& state, const CostTable& table);

/// Expectation at params; both overloads evolve from |+>^n.
double expectation(const CostTable& table, const ParamVector& params);

/// d<H_C>/d(theta) for every flat angle, by one forward pass and one
/// adjoint (reverse) pass. O(p n 2^n) time, two state buffers.
std::vector<double> gradient(const CostTable& table, const ParamVector& params);

/// <H_C> / max_x C(x). Throws for edgeless graphs.
double approx_ratio(const CostTable& table, const ParamVector& params);

/// Reusable evaluation context: owns its two state buffers, shares the
/// (immutable) cost table. One context per thread.
class QaoaSimulator {
 public:
  explicit QaoaSimulator(std::shared_ptr<const CostTable> table);

  const CostTable& table() const noexcept { return *table_; }

  double expectation(std::span<const double> flat_params);

  /// Fills grad (size 2p) and returns the expectation.
  double expectation_and_gradient(std::span<const double> flat_params, std::span<double> grad);

 private:
  void forward(std::span<const double> flat_params, std::vector<Complex>& psi) const;

  std::shared_ptr<const CostTable> table_;
  std::vector<Complex> psi_;
  std::vector<Complex> lambda_;
};

/// -<H_C> as a minimization objective over the flat 2p angles.
class QaoaObjective final : public Objective {
 public:
  QaoaObjective(std::shared_ptr<const CostTable> table, int rounds);

  std::size_t dimension() const override { return 2 * static_cast<std::size_t>(rounds_); }
  double value_and_gradient(std::span<const double> x, std::span<double> grad) override;
  double approx_ratio(double value) const override;

  int rounds() const noexcept { return rounds_; }
  const CostTable& table() const noexcept { return sim_.table(); }

 private:
  QaoaSimulator sim_;
  int rounds_;
};

}  // namespace qaoa
