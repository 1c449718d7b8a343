// Copyright 2026 The zxcut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

#include "zxcut/circuit.hpp"

namespace zxcut {

struct GenSpec {
  int qubits = 2;
  int sandwiches = 0;
  int toffolis = 0;
  int cnots = 0;
  int phase_gates = 0;
  std::uint64_t seed = 0;

  /// Throws InputError on negative counts or too few qubits.
  void validate() const;
  friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

/// mt19937_64 with sampling that does not depend on the standard library's
/// distributions, so sequences agree across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n);
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Shuffled components with uniformly placed, pairwise distinct qubits.
GateList generate(const GenSpec& spec);

/// Seed of the i-th rejection-sampling attempt.
std::uint64_t attempt_seed(std::uint64_t seed, int attempt);

struct SmallInstance {
  GateList gates;
  std::uint64_t seed = 0;
  int attempts = 0;
  std::size_t z_spiders = 0;
};

/// Rejection-samples generate() until the plus-plugged, partially simplified
/// diagram has at most cap Z-spiders. Throws InputError for Toffolis and
/// LimitError after max_attempts.
SmallInstance generate_small_verifiable(const GenSpec& spec, std::size_t cap = 16, int max_attempts = 1000);

/// Z-spiders of the plus-plugged, partially simplified diagram.
std::size_t small_instance_size(const GateList& g);

}  // namespace zxcut
