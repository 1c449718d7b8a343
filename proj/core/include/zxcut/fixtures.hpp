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

#include <vector>

#include "zxcut/circuit.hpp"
#include "zxcut/diagram.hpp"

namespace zxcut::fixtures {

// Each circuit is wrapped in Hadamards and meant to be plugged with zeros, so
// that the control wires keep their spiders instead of copying away.

/// T-CNOT-T on the target with an S-phased control.
GateList sandwich();
/// As sandwich(), with a T-phased control.
GateList t_control_sandwich();
/// Two sandwiches sharing one control.
GateList grouped_double_sandwich();
/// T, then k CNOTs from distinct S-phased controls, then T, all on qubit 0.
GateList cnot_chain(int k);
/// Eight T gates on qubit 0 blocked by four CNOTs from qubit 1 and three
/// side controls; the qubit-1 controls are in turn blocked by CNOTs from
/// qubit 5. Cutting the qubit-5 spider first is optimal.
GateList tiered();

/// Zero-plugged and partially simplified.
Diagram prepared(const GateList& g);

struct TieredLabels {
  std::vector<VertexId> t_spiders;
  /// The four qubit-1 controls, in id order.
  std::vector<VertexId> wire_controls;
  /// The three degree-1 controls on qubits 2-4.
  std::vector<VertexId> side_controls;
  /// The qubit-5 spider.
  VertexId hub = -1;
};

/// Identifies the roles of the Z-spiders in prepared(tiered()).
TieredLabels label_tiered(const Diagram& d);

}  // namespace zxcut::fixtures
