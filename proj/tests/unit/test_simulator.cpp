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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qaoa/rng.hpp"
#include "qaoa/simulator.hpp"

using namespace qaoa;
using std::numbers::pi;

namespace {

Graph single_edge() { return Graph(2, {{0, 1}}); }
Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

std::shared_ptr<const CostTable> shared_table(const Graph& g) {
  return std::make_shared<const CostTable>(build_cost_table(g));
}

ParamVector random_params(int p, RandomStream& rng) {
  std::vector<double> flat(2 * p);
  for (double& v : flat) v = rng.uniform(0.0, 2.0 * pi);
  return ParamVector(flat);
}

}  // namespace

TEST_CASE("ParamVector layout") {
  ParamVector pv(std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5, 0.6});
  CHECK(pv.rounds() == 3);
  CHECK(pv.dimension() == 6);
  CHECK(pv.gamma(0) == 0.1);
  CHECK(pv.gamma(2) == 0.3);
  CHECK(pv.beta(0) == 0.4);
  CHECK(pv.beta(2) == 0.6);
  const std::vector<double> gs{1, 2}, bs{3, 4};
  CHECK(ParamVector(gs, bs).flat()[2] == 3);
  CHECK_THROWS_AS(ParamVector(std::vector<double>{1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(ParamVector(0), std::invalid_argument);
}

TEST_CASE("plus_state") {
  const StateVector s1 = plus_state(1);
  CHECK(s1[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(s1[1].imag() == 0.0);
  const StateVector s2 = plus_state(2);
  for (std::size_t i = 0; i < 4; ++i) CHECK(s2[i] == Complex(0.5, 0.0));
  for (int n = 1; n <= 12; ++n) CHECK(std::abs(plus_state(n).norm_squared() - 1.0) < 1e-14);
  CHECK_THROWS_AS(plus_state(25), ResourceError);
  CHECK_THROWS_AS(plus_state(0), std::invalid_argument);
}

TEST_CASE("apply_phase") {
  const CostTable t = build_cost_table(single_edge());
  StateVector s = plus_state(2);
  apply_phase(s, t, 0.0);
  for (std::size_t i = 0; i < 4; ++i) CHECK(s[i] == Complex(0.5, 0.0));

  StateVector r = plus_state(2);
  apply_phase(r, t, 2.0 * pi);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(r[i] - Complex(0.5, 0.0)) < 1e-14);

  StateVector q = plus_state(2);
  apply_phase(q, t, pi);
  const double expected[] = {0.5, -0.5, -0.5, 0.5};
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(q[i] - Complex(expected[i], 0.0)) < 1e-15);

  StateVector wrong = plus_state(3);
  CHECK_THROWS_AS(apply_phase(wrong, t, 0.1), std::invalid_argument);
}

TEST_CASE("apply_mixer") {
  StateVector s = plus_state(3);
  const StateVector before = s;
  apply_mixer(s, 0.0);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] == before[i]);

  // |+>^n is an H_M eigenstate with eigenvalue n.
  for (double beta : {0.3, 1.1, -2.5}) {
    StateVector p = plus_state(4);
    apply_mixer(p, beta);
    const Complex phase = std::exp(Complex(0.0, -4.0 * beta));
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(std::abs(p[i] - phase * 0.25) < 1e-14);
  }

  StateVector zero = basis_state(1, 0);
  apply_mixer(zero, pi / 2);
  CHECK(std::abs(zero[0]) < 1e-15);
  CHECK(std::abs(zero[1] - Complex(0.0, -1.0)) < 1e-15);
}

TEST_CASE("evolve at zero angles is |+>") {
  const CostTable t = build_cost_table(gen_er(5, 0.5, 9));
  const StateVector s = evolve(t, ParamVector(3));
  const StateVector plus = plus_state(5);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(std::abs(s[i] - plus[i]) < 1e-15);
}

TEST_CASE("p=1 single edge closed form, checked against the dense oracle") {
  const Graph g = single_edge();
  const CostTable t = build_cost_table(g);
  // The dense expm oracle first fixes the closed form <C> = (1 + sin(4b) sin(g)) / 2.
  for (auto [gamma, beta] : {std::pair{pi / 2, pi / 8}, std::pair{1.2, 0.3}, std::pair{0.7, -0.4}}) {
    const double dense = oracle::dense_expectation(g, oracle::dense_qaoa_state(g, {gamma}, {beta}));
    const double closed = 0.5 * (1.0 + std::sin(4.0 * beta) * std::sin(gamma));
    REQUIRE(std::abs(dense - closed) < 1e-12);
    CHECK(std::abs(expectation(t, ParamVector(std::vector<double>{gamma, beta})) - dense) < 1e-12);
  }
  const ParamVector opt(std::vector<double>{pi / 2, pi / 8});
  CHECK(std::abs(expectation(t, opt) - 1.0) < 1e-12);
  CHECK(std::abs(approx_ratio(t, opt) - 1.0) < 1e-12);
  for (double g_i : gradient(t, opt)) CHECK(std::abs(g_i) < 1e-12);
}

TEST_CASE("evolve matches the dense matrix-exponential simulator") {
  RandomStream rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 1 + trial % 4;
    const int p = 1 + trial % 3;
    const Graph g = gen_er(n, 0.6, derive_seed(5, {static_cast<std::uint64_t>(trial)}));
    const CostTable t = build_cost_table(g);
    const ParamVector params = random_params(p, rng);
    std::vector<double> gs(p), bs(p);
    for (int k = 0; k < p; ++k) {
      gs[k] = params.gamma(k);
      bs[k] = params.beta(k);
    }
    const auto dense = oracle::dense_qaoa_state(g, gs, bs);
    const StateVector s = evolve(t, params);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(std::abs(s[i] - dense[static_cast<Eigen::Index>(i)]) < 1e-10);
    CHECK(std::abs(expectation(s, t) - oracle::dense_expectation(g, dense)) < 1e-10);
  }
}

TEST_CASE("expectation examples") {
  const CostTable tri = build_cost_table(triangle());
  CHECK(expectation(plus_state(3), tri) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(std::abs(approx_ratio(tri, ParamVector(2)) - 0.75) < 1e-15);
  for (std::size_t x = 0; x < 8; ++x) CHECK(expectation(basis_state(3, x), tri) == tri.values[x]);

  const Graph g = gen_er(9, 0.5, 1);
  const CostTable t = build_cost_table(g);
  CHECK(std::abs(expectation(plus_state(9), t) - g.num_edges() / 2.0) < 1e-12);
  CHECK_THROWS_AS(expectation(plus_state(3), t), std::invalid_argument);
}

TEST_CASE("approx_ratio rejects edgeless graphs") {
  const CostTable empty = build_cost_table(gen_er(4, 0.0, 1));
  CHECK_THROWS_AS(approx_ratio(empty, ParamVector(1)), std::invalid_argument);
  CHECK_THROWS_AS(QaoaObjective(std::make_shared<const CostTable>(empty), 1), std::invalid_argument);
}

TEST_CASE("norm is preserved by any layer sequence") {
  RandomStream rng(8);
  const CostTable t = build_cost_table(gen_er(7, 0.5, 4));
  StateVector s = plus_state(7);
  for (int k = 0; k < 40; ++k) {
    if (rng.bernoulli(0.5)) {
      apply_phase(s, t, rng.uniform(-10, 10));
    } else {
      apply_mixer(s, rng.uniform(-10, 10));
    }
    REQUIRE(std::abs(s.norm_squared() - 1.0) < 1e-10);
  }
}

TEST_CASE("expectation is 2pi periodic in every angle") {
  RandomStream rng(12);
  const CostTable t = build_cost_table(gen_er(6, 0.5, 21));
  const ParamVector base = random_params(3, rng);
  const double f0 = expectation(t, base);
  for (std::size_t i = 0; i < base.dimension(); ++i) {
    for (double shift : {2.0 * pi, -2.0 * pi}) {
      ParamVector moved = base;
      moved.flat()[i] += shift;
      CHECK(std::abs(expectation(t, moved) - f0) < 1e-10);
    }
  }
}

TEST_CASE("gradient is zero at the origin") {
  const CostTable t = build_cost_table(gen_er(6, 0.5, 2));
  for (double g : gradient(t, ParamVector(4))) CHECK(std::abs(g) < 1e-12);
}

TEST_CASE("adjoint gradient matches central differences") {
  RandomStream rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 7;
    const int p = 1 + trial % 6;
    const auto table = shared_table(gen_er(n, 0.5, derive_seed(17, {static_cast<std::uint64_t>(trial)})));
    const ParamVector params = random_params(p, rng);
    const auto grad = gradient(*table, params);
    const auto fd = oracle::central_differences(
        [&](const std::vector<double>& x) { return expectation(*table, ParamVector(x)); },
        std::vector<double>(params.flat().begin(), params.flat().end()), 1e-5);
    for (std::size_t i = 0; i < grad.size(); ++i) CHECK(std::abs(grad[i] - fd[i]) < 1e-6);
  }

  // The spec'd (n=6, p=4) instance shape.
  const auto table = shared_table(gen_er(6, 0.5, 606));
  const ParamVector params = random_params(4, rng);
  const auto grad = gradient(*table, params);
  const auto fd = oracle::central_differences(
      [&](const std::vector<double>& x) { return expectation(*table, ParamVector(x)); },
      std::vector<double>(params.flat().begin(), params.flat().end()), 1e-5);
  for (std::size_t i = 0; i < grad.size(); ++i) CHECK(std::abs(grad[i] - fd[i]) < 1e-6);
}

TEST_CASE("QaoaObjective negates expectation and gradient") {
  const auto table = shared_table(gen_er(5, 0.5, 3));
  QaoaObjective obj(table, 2);
  CHECK(obj.dimension() == 4);
  const std::vector<double> x{0.3, 0.9, 0.2, 1.4};
  std::vector<double> grad(4);
  const double v = obj.value_and_gradient(x, grad);
  CHECK(v == doctest::Approx(-expectation(*table, ParamVector(x))).epsilon(1e-14));
  const auto g = gradient(*table, ParamVector(x));
  for (std::size_t i = 0; i < 4; ++i) CHECK(grad[i] == doctest::Approx(-g[i]).epsilon(1e-14));
  CHECK(obj.approx_ratio(v) == doctest::Approx(-v / table->optimum));
  std::vector<double> wrong(3), wrong_grad(3);
  CHECK_THROWS_AS(obj.value_and_gradient(wrong, wrong_grad), std::invalid_argument);
}
