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

#include <complex>
#include <random>

#include "zxcut/circuit.hpp"
#include "zxcut/diagram.hpp"
#include "zxcut/oracle.hpp"

namespace zxcut::testing {

/// Random Clifford+T circuit; Clifford-only when t_gates is false.
inline GateList random_circuit(std::mt19937_64& rng, int qubits, int gates, bool t_gates = true,
                               bool hadamards = true) {
  GateList g;
  g.qubits = qubits;
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  for (int i = 0; i < gates; ++i) {
    const int a = pick(qubits);
    const int b = (a + 1 + pick(qubits - 1)) % qubits;
    switch (pick(hadamards ? 6 : 5)) {
      case 0: g.gates.push_back(Gate::cnot(a, b)); break;
      case 1: g.gates.push_back(t_gates ? Gate::t(a) : Gate::s(a)); break;
      case 2: g.gates.push_back(Gate::s(a)); break;
      case 3: g.gates.push_back(Gate::phase_gate(a, t_gates ? pick(8) : 2 * pick(4))); break;
      case 4: g.gates.push_back(Gate::z(a)); break;
      default: g.gates.push_back(Gate::h(a)); break;
    }
  }
  return g;
}

inline Bits random_bits(std::mt19937_64& rng, int n) {
  Bits b(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i)] = rng() & 1U;
  return b;
}

/// A scalar diagram: a random circuit plugged with random basis states.
inline Diagram random_scalar_diagram(std::mt19937_64& rng, int qubits, int gates, bool t_gates = true) {
  GateList g = random_circuit(rng, qubits, gates, t_gates);
  return plug_basis_states(build_from_gates(g), random_bits(rng, qubits), random_bits(rng, qubits));
}

/// The same circuit family plugged with |+> everywhere, which keeps more of
/// the structure alive under simplification.
inline Diagram random_plus_diagram(std::mt19937_64& rng, int qubits, int gates, bool t_gates = true) {
  return plug_plus(build_from_gates(random_circuit(rng, qubits, gates, t_gates)));
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace zxcut::testing
