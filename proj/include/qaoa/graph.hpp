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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qaoa {

/// Raised when a request would exceed a configured resource cap, e.g. a
/// 2^n cost table above the qubit limit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default qubit cap for anything that materializes 2^n entries.
inline constexpr int kDefaultMaxQubits = 24;

using Edge = std::pair<int, int>;

/// Undirected simple graph on vertices 0..n-1. Edges are stored with i < j,
/// sorted lexicographically, without duplicates.
///
/// Bitstring convention used everywhere: bit i of an integer x is the
/// partition label of vertex i.
class Graph {
 public:
  Graph(int n, std::vector<Edge> edges, std::optional<std::uint64_t> seed = std::nullopt);

  int num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::optional<std::uint64_t>& seed() const noexcept { return seed_; }

  bool operator==(const Graph&) const = default;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::optional<std::uint64_t> seed_;
};

/// G(n, p_edge): every candidate pair (i < j) is included independently,
/// visited in lexicographic order from a stream seeded by `seed`.
Graph gen_er(int n, double p_edge, std::uint64_t seed);

/// Number of edges cut by the partition `x` (bit i = side of vertex i).
/// Throws if x has bits set at or above n.
int cut_value(const Graph& g, std::uint64_t x);

/// Same, with x given as a string of '0'/'1' where character i is vertex i.
int cut_value(const Graph& g, std::string_view bits);

/// Diagonal of the MaxCut cost Hamiltonian over all 2^n basis states.
struct CostTable {
  int n = 0;
  std::size_t num_edges = 0;
  std::vector<double> values;
  double optimum = 0.0;

  std::size_t size() const noexcept { return values.size(); }
};

/// Enumerates all 2^n cuts (and the exact optimum in the same pass).
/// Throws ResourceError when n > max_qubits.
CostTable build_cost_table(const Graph& g, int max_qubits = kDefaultMaxQubits);

// {"n": int, "edges": [[i, j], ...], "seed": int}; seed omitted when unset.
void to_json(nlohmann::json& j, const Graph& g);
void from_json(const nlohmann::json& j, Graph& g);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace qaoa
