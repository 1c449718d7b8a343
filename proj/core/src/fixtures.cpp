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

#include "zxcut/fixtures.hpp"

#include "zxcut/error.hpp"
#include "zxcut/simplify.hpp"

namespace zxcut::fixtures {
namespace {

GateList wrapped(int qubits, const std::vector<Gate>& body) {
  GateList g;
  g.qubits = qubits;
  for (int q = 0; q < qubits; ++q) g.gates.push_back(Gate::h(q));
  g.gates.insert(g.gates.end(), body.begin(), body.end());
  for (int q = 0; q < qubits; ++q) g.gates.push_back(Gate::h(q));
  return g;
}

}  // namespace

GateList sandwich() { return wrapped(2, {Gate::s(0), Gate::t(1), Gate::cnot(0, 1), Gate::t(1)}); }

GateList t_control_sandwich() { return wrapped(2, {Gate::t(0), Gate::t(1), Gate::cnot(0, 1), Gate::t(1)}); }

GateList grouped_double_sandwich() {
  return wrapped(3, {Gate::s(0), Gate::t(1), Gate::t(2), Gate::cnot(0, 1), Gate::cnot(0, 2), Gate::t(1), Gate::t(2)});
}

GateList cnot_chain(int k) {
  std::vector<Gate> body{Gate::t(0)};
  for (int i = 1; i <= k; ++i) {
    body.insert(body.begin(), Gate::s(i));
    body.push_back(Gate::cnot(i, 0));
  }
  body.push_back(Gate::t(0));
  return wrapped(k + 1, body);
}

GateList tiered() {
  std::vector<Gate> body{Gate::s(1), Gate::s(2), Gate::s(3), Gate::s(4)};
  const int side[3] = {2, 3, 4};
  body.push_back(Gate::t(0));
  for (int i = 0; i < 4; ++i) {
    body.push_back(Gate::cnot(1, 0));
    body.push_back(Gate::t(0));
    if (i == 3) break;
    body.push_back(Gate::cnot(side[i], 0));
    body.push_back(Gate::cnot(5, 1));
    body.push_back(Gate::t(0));
  }
  body.push_back(Gate::s(1));
  return wrapped(6, body);
}

Diagram prepared(const GateList& g) {
  Diagram d = plug_zeros(build_from_gates(g));
  partial_simplify(d);
  return d;
}

TieredLabels label_tiered(const Diagram& d) {
  TieredLabels l;
  for (VertexId v : d.vertices()) {
    if (d.kind(v) != VertexKind::Z) continue;
    if (d.phase(v).is_t_like()) {
      l.t_spiders.push_back(v);
      continue;
    }
    if (d.degree(v) == 1) {
      l.side_controls.push_back(v);
      continue;
    }
    bool touches_t = false;
    for (const auto& [x, k] : d.neighbours(v)) {
      for (const auto& [y, k2] : d.neighbours(x)) touches_t |= d.phase(y).is_t_like();
    }
    if (touches_t) {
      l.wire_controls.push_back(v);
    } else if (l.hub < 0) {
      l.hub = v;
    } else {
      throw PatternError("label_tiered: two hub candidates");
    }
  }
  if (l.t_spiders.size() != 8 || l.wire_controls.size() != 4 || l.side_controls.size() != 3 || l.hub < 0) {
    throw PatternError("label_tiered: diagram does not have the tiered fixture's shape");
  }
  return l;
}

}  // namespace zxcut::fixtures
