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

#include "qaoa/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "qaoa/rng.hpp"

namespace qaoa {

Graph::Graph(int n, std::vector<Edge> edges, std::optional<std::uint64_t> seed)
    : n_(n), edges_(std::move(edges)), seed_(seed) {
  if (n_ < 1) throw std::invalid_argument("graph must have at least one vertex");
  for (auto& [i, j] : edges_) {
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= n_) {
      throw std::invalid_argument("edge (" + std::to_string(i) + ", " + std::to_string(j) +
                                  ") out of range for n = " + std::to_string(n_));
    }
    if (i == j) throw std::invalid_argument("self-loop on vertex " + std::to_string(i));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("duplicate edge in graph");
  }
}

Graph gen_er(int n, double p_edge, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_er: n must be >= 1");
  if (!(p_edge >= 0.0 && p_edge <= 1.0)) {
    throw std::invalid_argument("gen_er: edge probability must lie in [0, 1]");
  }
  RandomStream rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.bernoulli(p_edge)) edges.emplace_back(i, j);
    }
  }
  return Graph(n, std::move(edges), seed);
}

int cut_value(const Graph& g, std::uint64_t x) {
  const int n = g.num_vertices();
  if (n < 64 && (x >> n) != 0) {
    throw std::invalid_argument("cut_value: bitstring has bits beyond vertex count");
  }
  int cut = 0;
  for (const auto& [i, j] : g.edges()) {
    cut += static_cast<int>(((x >> i) ^ (x >> j)) & 1U);
  }
  return cut;
}

int cut_value(const Graph& g, std::string_view bits) {
  if (bits.size() != static_cast<std::size_t>(g.num_vertices())) {
    throw std::invalid_argument("cut_value: expected " + std::to_string(g.num_vertices()) +
                                " bits, got " + std::to_string(bits.size()));
  }
  if (bits.size() > 64) throw std::invalid_argument("cut_value: at most 64 vertices supported");
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      x |= std::uint64_t{1} << i;
    } else if (bits[i] != '0') {
      throw std::invalid_argument("cut_value: bitstring must contain only '0' and '1'");
    }
  }
  return cut_value(g, x);
}

CostTable build_cost_table(const Graph& g, int max_qubits) {
  const int n = g.num_vertices();
  if (n > max_qubits) {
    throw ResourceError("cost table for n = " + std::to_string(n) + " exceeds the qubit cap of " +
                        std::to_string(max_qubits) + " (2^n entries)");
  }
  CostTable table;
  table.n = n;
  table.num_edges = g.num_edges();
  const std::size_t dim = std::size_t{1} << n;
  table.values.assign(dim, 0.0);

  // Per-vertex neighbour masks make each entry a popcount.
  std::vector<std::uint64_t> lower_neighbours(n, 0);
  for (const auto& [i, j] : g.edges()) lower_neighbours[j] |= std::uint64_t{1} << i;

  double best = 0.0;
  for (std::size_t x = 0; x < dim; ++x) {
    int cut = 0;
    for (int v = 1; v < n; ++v) {
      const std::uint64_t mask = lower_neighbours[v];
      if (mask == 0) continue;
      const std::uint64_t side = ((x >> v) & 1U) ? ~std::uint64_t{x} : std::uint64_t{x};
      cut += std::popcount(side & mask);
    }
    table.values[x] = cut;
    best = std::max(best, static_cast<double>(cut));
  }
  table.optimum = best;
  return table;
}

void to_json(nlohmann::json& j, const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  j = nlohmann::json{{"n", g.num_vertices()}, {"edges", std::move(edges)}};
  if (g.seed()) j["seed"] = *g.seed();
}

Graph graph_from_json(const nlohmann::json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph JSON: edge must be [i, j]");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  std::optional<std::uint64_t> seed;
  if (j.contains("seed") && !j["seed"].is_null()) seed = j["seed"].get<std::uint64_t>();
  return Graph(j.at("n").get<int>(), std::move(edges), seed);
}

void from_json(const nlohmann::json& j, Graph& g) { g = graph_from_json(j); }

}  // namespace qaoa
