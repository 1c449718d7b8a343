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

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "zxcut/diagram.hpp"

namespace zxcut {

enum class GateType { CNOT, T, S, Z, H, Phase, Toffoli, Sandwich };

struct Gate {
  GateType type = GateType::T;
  std::array<int, 3> qubits{0, 0, 0};
  /// Numerator of n*pi/4 for GateType::Phase.
  int phase = 0;

  int arity() const;
  static Gate cnot(int c, int t) { return {GateType::CNOT, {c, t, 0}, 0}; }
  static Gate t(int q) { return {GateType::T, {q, 0, 0}, 0}; }
  static Gate s(int q) { return {GateType::S, {q, 0, 0}, 0}; }
  static Gate z(int q) { return {GateType::Z, {q, 0, 0}, 0}; }
  static Gate h(int q) { return {GateType::H, {q, 0, 0}, 0}; }
  static Gate phase_gate(int q, int n) { return {GateType::Phase, {q, 0, 0}, ((n % 8) + 8) % 8}; }
  static Gate toffoli(int a, int b, int t) { return {GateType::Toffoli, {a, b, t}, 0}; }
  static Gate sandwich(int c, int t) { return {GateType::Sandwich, {c, t, 0}, 0}; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

struct GateList {
  int qubits = 0;
  std::vector<Gate> gates;

  /// Throws InputError on out-of-range or repeated qubits.
  void validate() const;
  friend bool operator==(const GateList&, const GateList&) = default;
};

using Bits = std::vector<bool>;
/// "0110" -> {0,1,1,0}; qubit 0 first.
Bits parse_bits(std::string_view s);
std::string format_bits(const Bits& b);

GateList parse_gate_list(std::string_view text);
std::string format_gate_list(const GateList& g);

/// Toffoli and sandwich gates replaced by their Clifford+T expansions.
GateList expand_composites(const GateList& g);

/// A diagram whose linear map equals the circuit unitary exactly.
Diagram build_from_gates(const GateList& g);

/// Replaces each boundary by a basis state or effect; the result is a scalar
/// diagram equal to <out|U|in>.
Diagram plug_basis_states(Diagram d, const Bits& in_bits, const Bits& out_bits);
/// All-zero plugging.
Diagram plug_zeros(Diagram d);
/// <+...+|U|+...+>. Circuits without Hadamards collapse under zero plugs, so
/// benchmarks use this instead.
Diagram plug_plus(Diagram d);

}  // namespace zxcut
