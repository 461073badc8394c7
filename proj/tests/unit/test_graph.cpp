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
#include <set>

#include "oracles.hpp"
#include "qaoa/graph.hpp"
#include "qaoa/rng.hpp"

using namespace qaoa;

namespace {
Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }
Graph complete4() { return gen_er(4, 1.0, 7); }
}  // namespace

TEST_CASE("gen_er inclusion extremes") {
  CHECK(gen_er(5, 0.0, 7).num_edges() == 0);
  const Graph k4 = complete4();
  CHECK(k4.num_edges() == 6);
  CHECK(k4.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("gen_er is deterministic in its seed") {
  const Graph a = gen_er(12, 0.5, 42);
  const Graph b = gen_er(12, 0.5, 42);
  CHECK(a == b);
  CHECK(a.seed() == std::optional<std::uint64_t>(42));
  CHECK(gen_er(12, 0.5, 43).edges() != a.edges());
}

TEST_CASE("gen_er rejects bad arguments") {
  CHECK_THROWS_AS(gen_er(0, 0.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_er(4, 1.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_er(4, -0.1, 1), std::invalid_argument);
}

TEST_CASE("graph invariants") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  const Graph g(4, {{2, 1}, {0, 3}});
  CHECK(g.edges() == std::vector<Edge>{{0, 3}, {1, 2}});

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph r = gen_er(9, 0.5, seed);
    std::set<Edge> unique(r.edges().begin(), r.edges().end());
    CHECK(unique.size() == r.num_edges());
    CHECK(r.num_edges() <= 36);
    for (const auto& [i, j] : r.edges()) CHECK(i < j);
  }
}

TEST_CASE("ER(10, 0.5) edge count mean is 22.5 within 3 standard errors") {
  const int samples = 2000;
  double sum = 0.0;
  for (int s = 0; s < samples; ++s) {
    sum += static_cast<double>(gen_er(10, 0.5, derive_seed(2024, {static_cast<std::uint64_t>(s)})).num_edges());
  }
  const double mean = sum / samples;
  // Binomial(45, 1/2): variance 11.25.
  const double se = std::sqrt(11.25 / samples);
  CHECK(std::abs(mean - 22.5) < 3.0 * se);
}

TEST_CASE("cut_value examples") {
  const Graph edge(2, {{0, 1}});
  CHECK(cut_value(edge, "01") == 1);
  CHECK(cut_value(triangle(), "001") == 2);
  CHECK(cut_value(complete4(), "0011") == 4);
  CHECK(cut_value(complete4(), std::uint64_t{0b0101}) == 4);
  CHECK(cut_value(triangle(), std::uint64_t{0}) == 0);
}

TEST_CASE("cut_value rejects malformed bitstrings") {
  CHECK_THROWS_AS(cut_value(triangle(), "01"), std::invalid_argument);
  CHECK_THROWS_AS(cut_value(triangle(), "0101"), std::invalid_argument);
  CHECK_THROWS_AS(cut_value(triangle(), "0a1"), std::invalid_argument);
  CHECK_THROWS_AS(cut_value(triangle(), std::uint64_t{8}), std::invalid_argument);
}

TEST_CASE("build_cost_table small cases") {
  const CostTable t = build_cost_table(triangle());
  CHECK(t.values == std::vector<double>{0, 2, 2, 2, 2, 2, 2, 0});
  CHECK(t.optimum == 2.0);
  CHECK(t.num_edges == 3);

  const CostTable e = build_cost_table(Graph(2, {{0, 1}}));
  CHECK(e.values == std::vector<double>{0, 1, 1, 0});
  CHECK(e.optimum == 1.0);
}

TEST_CASE("build_cost_table matches exhaustive oracle") {
  const Graph g8 = gen_er(8, 0.5, 3);
  CHECK(build_cost_table(g8).optimum == oracle::brute_force_maxcut(g8));

  for (int n = 1; n <= 10; ++n) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const Graph g = gen_er(n, 0.5, derive_seed(77, {static_cast<std::uint64_t>(n), seed}));
      const CostTable t = build_cost_table(g);
      CHECK(t.optimum == oracle::brute_force_maxcut(g));
      const std::size_t mask = t.size() - 1;
      for (std::size_t x = 0; x < t.size(); ++x) {
        REQUIRE(t.values[x] == cut_value(g, std::uint64_t{x}));
        REQUIRE(t.values[x] == t.values[x ^ mask]);
        REQUIRE(t.values[x] >= 0.0);
        REQUIRE(t.values[x] <= static_cast<double>(g.num_edges()));
      }
      if (g.num_edges() > 0) CHECK(t.optimum >= std::ceil(g.num_edges() / 2.0));
    }
  }
}

TEST_CASE("build_cost_table enforces the qubit cap") {
  CHECK_THROWS_AS(build_cost_table(gen_er(25, 0.0, 1)), ResourceError);
  CHECK_THROWS_AS(build_cost_table(gen_er(6, 0.5, 1), 5), ResourceError);
  CHECK_NOTHROW(build_cost_table(gen_er(6, 0.5, 1), 6));
}

TEST_CASE("graph JSON is canonical and round-trips") {
  const Graph g = gen_er(7, 0.5, 11);
  nlohmann::json j = g;
  CHECK(j.at("n") == 7);
  CHECK(j.at("seed") == 11);
  const auto edges = j.at("edges").get<std::vector<std::vector<int>>>();
  CHECK(std::is_sorted(edges.begin(), edges.end()));
  CHECK(graph_from_json(nlohmann::json::parse(j.dump())) == g);

  const Graph unseeded = graph_from_json(nlohmann::json::parse(R"({"n": 3, "edges": [[2, 0], [1, 2]]})"));
  CHECK(unseeded.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
  CHECK_FALSE(unseeded.seed().has_value());
  CHECK_THROWS(graph_from_json(nlohmann::json::parse(R"({"n": 3, "edges": [[0]]})")));
}

TEST_CASE("derived seeds differ by key and are stable") {
  CHECK(derive_seed(1, {2, 3}) == derive_seed(1, {2, 3}));
  CHECK(derive_seed(1, {2, 3}) != derive_seed(1, {3, 2}));
  CHECK(derive_seed(1, {2, 3}) != derive_seed(2, {2, 3}));
  RandomStream s(5);
  const double a = s.uniform(0, 1);
  s.reset();
  CHECK(s.uniform(0, 1) == a);
}
