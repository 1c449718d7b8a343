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

#include "zxcut/circuit_gen.hpp"

#include <numeric>

#include "zxcut/error.hpp"
#include "zxcut/simplify.hpp"

namespace zxcut {

void GenSpec::validate() const {
  if (qubits < 0 || sandwiches < 0 || toffolis < 0 || cnots < 0 || phase_gates < 0) {
    throw InputError("GenSpec: counts must be non-negative");
  }
  int need = 0;
  if (phase_gates > 0) need = 1;
  if (sandwiches > 0 || cnots > 0) need = 2;
  if (toffolis > 0) need = 3;
  if (qubits < need) {
    throw InputError("GenSpec: " + std::to_string(qubits) + " qubits cannot hold gates of arity " + std::to_string(need));
  }
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  const std::uint64_t limit = -n % n;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= limit) return r % n;
  }
}

GateList generate(const GenSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  std::vector<GateType> parts;
  parts.insert(parts.end(), spec.sandwiches, GateType::Sandwich);
  parts.insert(parts.end(), spec.toffolis, GateType::Toffoli);
  parts.insert(parts.end(), spec.cnots, GateType::CNOT);
  parts.insert(parts.end(), spec.phase_gates, GateType::Phase);
  rng.shuffle(parts);

  GateList g;
  g.qubits = spec.qubits;
  std::vector<int> pool(spec.qubits);
  auto draw = [&](int k) {
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < k; ++i) std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
  };
  for (GateType t : parts) {
    switch (t) {
      case GateType::Sandwich:
        draw(2);
        g.gates.push_back(Gate::sandwich(pool[0], pool[1]));
        break;
      case GateType::Toffoli:
        draw(3);
        g.gates.push_back(Gate::toffoli(pool[0], pool[1], pool[2]));
        break;
      case GateType::CNOT:
        draw(2);
        g.gates.push_back(Gate::cnot(pool[0], pool[1]));
        break;
      default: {
        draw(1);
        const int n = static_cast<int>(rng.below(8));
        g.gates.push_back(Gate::phase_gate(pool[0], n));
      }
    }
  }
  return g;
}

std::uint64_t attempt_seed(std::uint64_t seed, int attempt) {
  if (attempt == 0) return seed;
  // splitmix64 step
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t small_instance_size(const GateList& g) {
  Diagram d = plug_plus(build_from_gates(g));
  partial_simplify(d);
  std::size_t n = 0;
  for (VertexId v : d.vertices()) n += d.kind(v) == VertexKind::Z;
  return n;
}

SmallInstance generate_small_verifiable(const GenSpec& spec, std::size_t cap, int max_attempts) {
  if (spec.toffolis != 0) throw InputError("generate_small_verifiable: Toffolis are not allowed");
  spec.validate();
  for (int i = 0; i < max_attempts; ++i) {
    GenSpec s = spec;
    s.seed = attempt_seed(spec.seed, i);
    GateList g = generate(s);
    const std::size_t n = small_instance_size(g);
    if (n <= cap) return {std::move(g), s.seed, i + 1, n};
  }
  throw LimitError("generate_small_verifiable: no instance within " + std::to_string(cap) + " Z-spiders after " +
                   std::to_string(max_attempts) + " attempts");
}

}  // namespace zxcut
