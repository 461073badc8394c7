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

#include <cstdint>
#include <initializer_list>
#include <random>

namespace qaoa {

/// SplitMix64 finalizer. Bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Derives a child seed from a master seed and an ordered list of keys, e.g.
/// (master, n, p, graph_index, init_index). Distinct key tuples give
/// statistically independent streams; the mapping is platform-independent.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> keys) noexcept;

/// A deterministic random stream. Thin wrapper over mt19937_64 so that every
/// consumer draws through the same engine type.
class RandomStream {
 public:
  using engine_type = std::mt19937_64;

  explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  /// Child stream keyed by `keys`; does not advance this stream.
  RandomStream child(std::initializer_list<std::uint64_t> keys) const {
    return RandomStream(derive_seed(seed_, keys));
  }

  void reset() { engine_.seed(seed_); }

  std::uint64_t seed() const noexcept { return seed_; }

  /// Uniform draw on [lo, hi).
  double uniform(double lo, double hi);
  double normal();
  bool bernoulli(double probability);

  engine_type& engine() noexcept { return engine_; }

 private:
  std::uint64_t seed_;
  engine_type engine_;
};

}  // namespace qaoa
