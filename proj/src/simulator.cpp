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

#include "qaoa/simulator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qaoa {
namespace {

void check_qubits(int n, int max_qubits) {
  if (n < 1) throw std::invalid_argument("state needs at least one qubit");
  if (n > max_qubits) {
    throw ResourceError("state on " + std::to_string(n) + " qubits exceeds the cap of " +
                        std::to_string(max_qubits));
  }
}

void check_rounds(std::size_t flat_size) {
  if (flat_size == 0 || flat_size % 2 != 0) {
    throw std::invalid_argument("QAOA parameters must have even, nonzero length 2p, got " +
                                std::to_string(flat_size));
  }
}

// amps[x] *= exp(-i gamma values[x]). Cut values are small integers, so the
// phases are looked up from a table of exp(-i gamma k).
void phase_kernel(std::span<Complex> amps, const CostTable& table, double gamma) {
  const std::size_t levels = table.num_edges + 1;
  std::vector<Complex> phases(levels);
  for (std::size_t k = 0; k < levels; ++k) {
    const double angle = -gamma * static_cast<double>(k);
    phases[k] = Complex(std::cos(angle), std::sin(angle));
  }
  const double* values = table.values.data();
  for (std::size_t x = 0; x < amps.size(); ++x) {
    const double v = values[x];
    const auto k = static_cast<std::size_t>(v);
    const Complex ph = (static_cast<double>(k) == v && k < levels)
                           ? phases[k]
                           : Complex(std::cos(gamma * v), -std::sin(gamma * v));
    const double re = amps[x].real() * ph.real() - amps[x].imag() * ph.imag();
    const double im = amps[x].real() * ph.imag() + amps[x].imag() * ph.real();
    amps[x] = Complex(re, im);
  }
}

// exp(-i beta X) = [[c, -is], [-is, c]] on every qubit.
void mixer_kernel(std::span<Complex> amps, int n, double beta) {
  const double c = std::cos(beta);
  const double s = std::sin(beta);
  const std::size_t dim = amps.size();
  Complex* a = amps.data();
  for (int q = 0; q < n; ++q) {
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
      for (std::size_t i = base; i < base + stride; ++i) {
        const Complex a0 = a[i];
        const Complex a1 = a[i + stride];
        a[i] = Complex(c * a0.real() + s * a1.imag(), c * a0.imag() - s * a1.real());
        a[i + stride] = Complex(s * a0.imag() + c * a1.real(), -s * a0.real() + c * a1.imag());
      }
    }
  }
}

// Im <l| H_C |r>
double phase_generator_imag(std::span<const Complex> l, std::span<const Complex> r,
                            const CostTable& table) {
  double acc = 0.0;
  for (std::size_t x = 0; x < l.size(); ++x) {
    // Im(conj(l) r) = l.re r.im - l.im r.re
    acc += table.values[x] * (l[x].real() * r[x].imag() - l[x].imag() * r[x].real());
  }
  return acc;
}

// Im <l| sum_q X_q |r>
double mixer_generator_imag(std::span<const Complex> l, std::span<const Complex> r, int n) {
  const std::size_t dim = l.size();
  double acc = 0.0;
  for (int q = 0; q < n; ++q) {
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
      for (std::size_t i = base; i < base + stride; ++i) {
        const std::size_t j = i + stride;
        acc += l[i].real() * r[j].imag() - l[i].imag() * r[j].real();
        acc += l[j].real() * r[i].imag() - l[j].imag() * r[i].real();
      }
    }
  }
  return acc;
}

double expectation_kernel(std::span<const Complex> amps, const CostTable& table) {
  double acc = 0.0;
  for (std::size_t x = 0; x < amps.size(); ++x) acc += std::norm(amps[x]) * table.values[x];
  return acc;
}

void check_match(std::size_t amps, const CostTable& table) {
  if (amps != table.values.size()) {
    throw std::invalid_argument("state dimension " + std::to_string(amps) +
                                " does not match cost table dimension " +
                                std::to_string(table.values.size()));
  }
}

}  // namespace

ParamVector::ParamVector(int p) {
  if (p < 1) throw std::invalid_argument("QAOA needs at least one round");
  flat_.assign(2 * static_cast<std::size_t>(p), 0.0);
}

ParamVector::ParamVector(std::vector<double> flat) : flat_(std::move(flat)) {
  check_rounds(flat_.size());
}

ParamVector::ParamVector(std::span<const double> gammas, std::span<const double> betas) {
  if (gammas.size() != betas.size()) {
    throw std::invalid_argument("gamma and beta counts differ");
  }
  flat_.assign(gammas.begin(), gammas.end());
  flat_.insert(flat_.end(), betas.begin(), betas.end());
  check_rounds(flat_.size());
}

StateVector::StateVector(int n, std::vector<Complex> amplitudes) : n_(n), amps_(std::move(amplitudes)) {
  if (n_ < 1 || n_ >= 64 || amps_.size() != (std::size_t{1} << n_)) {
    throw std::invalid_argument("state vector on " + std::to_string(n_) + " qubits needs 2^n amplitudes");
  }
}

double StateVector::norm_squared() const noexcept {
  double acc = 0.0;
  for (const auto& a : amps_) acc += std::norm(a);
  return acc;
}

StateVector plus_state(int n, int max_qubits) {
  check_qubits(n, max_qubits);
  const std::size_t dim = std::size_t{1} << n;
  const double amp = std::pow(2.0, -0.5 * n);
  return StateVector(n, std::vector<Complex>(dim, Complex(amp, 0.0)));
}

StateVector basis_state(int n, std::size_t x, int max_qubits) {
  check_qubits(n, max_qubits);
  const std::size_t dim = std::size_t{1} << n;
  if (x >= dim) throw std::invalid_argument("basis index out of range");
  std::vector<Complex> amps(dim);
  amps[x] = 1.0;
  return StateVector(n, std::move(amps));
}

void apply_phase(StateVector& state, const CostTable& table, double gamma) {
  check_match(state.size(), table);
  phase_kernel(state.amplitudes(), table, gamma);
}

void apply_mixer(StateVector& state, double beta) {
  mixer_kernel(state.amplitudes(), state.num_qubits(), beta);
}

StateVector evolve(const CostTable& table, const ParamVector& params) {
  StateVector state = plus_state(table.n);
  for (int k = 0; k < params.rounds(); ++k) {
    phase_kernel(state.amplitudes(), table, params.gamma(k));
    mixer_kernel(state.amplitudes(), table.n, params.beta(k));
  }
  return state;
}

double expectation(const StateVector& state, const CostTable& table) {
  check_match(state.size(), table);
  return expectation_kernel(state.amplitudes(), table);
}

double expectation(const CostTable& table, const ParamVector& params) {
  return expectation(evolve(table, params), table);
}

std::vector<double> gradient(const CostTable& table, const ParamVector& params) {
  QaoaSimulator sim(std::shared_ptr<const CostTable>(&table, [](const CostTable*) {}));
  std::vector<double> grad(params.dimension());
  sim.expectation_and_gradient(params.flat(), grad);
  return grad;
}

double approx_ratio(const CostTable& table, const ParamVector& params) {
  if (!(table.optimum > 0.0)) {
    throw std::invalid_argument("approximation ratio is undefined for a graph without edges");
  }
  return expectation(table, params) / table.optimum;
}

QaoaSimulator::QaoaSimulator(std::shared_ptr<const CostTable> table) : table_(std::move(table)) {
  if (!table_) throw std::invalid_argument("QaoaSimulator needs a cost table");
  check_qubits(table_->n, 62);
  psi_.resize(table_->values.size());
  lambda_.resize(table_->values.size());
}

void QaoaSimulator::forward(std::span<const double> flat, std::vector<Complex>& psi) const {
  check_rounds(flat.size());
  const std::size_t p = flat.size() / 2;
  const double amp = std::pow(2.0, -0.5 * table_->n);
  std::fill(psi.begin(), psi.end(), Complex(amp, 0.0));
  for (std::size_t k = 0; k < p; ++k) {
    phase_kernel(psi, *table_, flat[k]);
    mixer_kernel(psi, table_->n, flat[p + k]);
  }
}

double QaoaSimulator::expectation(std::span<const double> flat) {
  forward(flat, psi_);
  return expectation_kernel(psi_, *table_);
}

double QaoaSimulator::expectation_and_gradient(std::span<const double> flat, std::span<double> grad) {
  if (grad.size() != flat.size()) throw std::invalid_argument("gradient buffer has wrong size");
  forward(flat, psi_);
  const double value = expectation_kernel(psi_, *table_);

  const std::size_t p = flat.size() / 2;
  const int n = table_->n;
  for (std::size_t x = 0; x < psi_.size(); ++x) lambda_[x] = psi_[x] * table_->values[x];

  // Walk the circuit backwards, un-applying each layer to both the state
  // and the adjoint vector. d<C>/dtheta = 2 Im <lambda| G |psi>.
  for (std::size_t k = p; k-- > 0;) {
    grad[p + k] = 2.0 * mixer_generator_imag(lambda_, psi_, n);
    mixer_kernel(psi_, n, -flat[p + k]);
    mixer_kernel(lambda_, n, -flat[p + k]);
    grad[k] = 2.0 * phase_generator_imag(lambda_, psi_, *table_);
    if (k > 0) {
      phase_kernel(psi_, *table_, -flat[k]);
      phase_kernel(lambda_, *table_, -flat[k]);
    }
  }
  return value;
}

QaoaObjective::QaoaObjective(std::shared_ptr<const CostTable> table, int rounds)
    : sim_(std::move(table)), rounds_(rounds) {
  if (rounds_ < 1) throw std::invalid_argument("QAOA needs at least one round");
  if (!(sim_.table().optimum > 0.0)) {
    throw std::invalid_argument("QAOA objective needs a graph with at least one edge");
  }
}

double QaoaObjective::value_and_gradient(std::span<const double> x, std::span<double> grad) {
  if (x.size() != dimension()) throw std::invalid_argument("parameter dimension mismatch");
  const double value = sim_.expectation_and_gradient(x, grad);
  for (double& g : grad) g = -g;
  return -value;
}

double QaoaObjective::approx_ratio(double value) const { return -value / sim_.table().optimum; }

}  // namespace qaoa
