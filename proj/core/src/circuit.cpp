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

#include "zxcut/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "zxcut/error.hpp"

namespace zxcut {

int Gate::arity() const {
  switch (type) {
    case GateType::CNOT:
    case GateType::Sandwich:
      return 2;
    case GateType::Toffoli:
      return 3;
    default:
      return 1;
  }
}

void GateList::validate() const {
  if (qubits < 0) throw InputError("negative qubit count");
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    for (int k = 0; k < g.arity(); ++k) {
      int q = g.qubits[k];
      if (q < 0 || q >= qubits) {
        throw InputError("gate " + std::to_string(i) + ": qubit " + std::to_string(q) + " out of range");
      }
      for (int j = 0; j < k; ++j) {
        if (g.qubits[j] == q) throw InputError("gate " + std::to_string(i) + ": repeated qubit");
      }
    }
  }
}

Bits parse_bits(std::string_view s) {
  Bits b;
  for (char c : s) {
    if (c != '0' && c != '1') throw InputError("bitstring may only contain 0 and 1");
    b.push_back(c == '1');
  }
  return b;
}

std::string format_bits(const Bits& b) {
  std::string s;
  for (bool x : b) s.push_back(x ? '1' : '0');
  return s;
}

namespace {

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
  return s;
}

}  // namespace

GateList parse_gate_list(std::string_view text) {
  GateList g;
  bool have_header = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw InputError("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name)) continue;
    name = upper(name);
    std::vector<long> args;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) fail("bad integer '" + tok + "'");
        args.push_back(v);
      } catch (const std::logic_error&) {
        fail("bad integer '" + tok + "'");
      }
    }
    auto want = [&](std::size_t n) {
      if (args.size() != n) fail(name + " expects " + std::to_string(n) + " arguments");
    };
    if (!have_header) {
      if (name != "QUBITS") fail("first statement must be QUBITS n");
      want(1);
      if (args[0] < 0 || args[0] > 4096) fail("unreasonable qubit count");
      g.qubits = static_cast<int>(args[0]);
      have_header = true;
      continue;
    }
    auto q = [&](std::size_t i) { return static_cast<int>(args[i]); };
    if (name == "CNOT" || name == "CX") {
      want(2);
      g.gates.push_back(Gate::cnot(q(0), q(1)));
    } else if (name == "T") {
      want(1);
      g.gates.push_back(Gate::t(q(0)));
    } else if (name == "S") {
      want(1);
      g.gates.push_back(Gate::s(q(0)));
    } else if (name == "Z" || name == "ZG") {
      want(1);
      g.gates.push_back(Gate::z(q(0)));
    } else if (name == "H") {
      want(1);
      g.gates.push_back(Gate::h(q(0)));
    } else if (name == "PHASE") {
      want(2);
      g.gates.push_back(Gate::phase_gate(q(0), q(1)));
    } else if (name == "TOF" || name == "CCX" || name == "TOFFOLI") {
      want(3);
      g.gates.push_back(Gate::toffoli(q(0), q(1), q(2)));
    } else if (name == "SANDWICH") {
      want(2);
      g.gates.push_back(Gate::sandwich(q(0), q(1)));
    } else {
      fail("unknown gate '" + name + "'");
    }
    try {
      GateList one{g.qubits, {g.gates.back()}};
      one.validate();
    } catch (const InputError& e) {
      fail(e.what());
    }
  }
  if (!have_header) throw InputError("missing QUBITS header");
  return g;
}

std::string format_gate_list(const GateList& g) {
  std::ostringstream os;
  os << "QUBITS " << g.qubits << "\n";
  for (const Gate& x : g.gates) {
    switch (x.type) {
      case GateType::CNOT:
        os << "CNOT " << x.qubits[0] << " " << x.qubits[1];
        break;
      case GateType::T:
        os << "T " << x.qubits[0];
        break;
      case GateType::S:
        os << "S " << x.qubits[0];
        break;
      case GateType::Z:
        os << "Z " << x.qubits[0];
        break;
      case GateType::H:
        os << "H " << x.qubits[0];
        break;
      case GateType::Phase:
        os << "PHASE " << x.qubits[0] << " " << x.phase;
        break;
      case GateType::Toffoli:
        os << "TOF " << x.qubits[0] << " " << x.qubits[1] << " " << x.qubits[2];
        break;
      case GateType::Sandwich:
        os << "SANDWICH " << x.qubits[0] << " " << x.qubits[1];
        break;
    }
    os << "\n";
  }
  return os.str();
}

GateList expand_composites(const GateList& g) {
  GateList out{g.qubits, {}};
  for (const Gate& x : g.gates) {
    if (x.type == GateType::Sandwich) {
      int c = x.qubits[0];
      int t = x.qubits[1];
      out.gates.push_back(Gate::t(t));
      out.gates.push_back(Gate::cnot(c, t));
      out.gates.push_back(Gate::t(t));
    } else if (x.type == GateType::Toffoli) {
      int a = x.qubits[0];
      int b = x.qubits[1];
      int t = x.qubits[2];
      const Gate seq[] = {Gate::h(t),     Gate::cnot(b, t), Gate::phase_gate(t, 7), Gate::cnot(a, t),
                          Gate::t(t),     Gate::cnot(b, t), Gate::phase_gate(t, 7), Gate::cnot(a, t),
                          Gate::t(b),     Gate::t(t),       Gate::h(t),             Gate::cnot(a, b),
                          Gate::t(a),     Gate::phase_gate(b, 7), Gate::cnot(a, b)};
      out.gates.insert(out.gates.end(), std::begin(seq), std::end(seq));
    } else {
      out.gates.push_back(x);
    }
  }
  return out;
}

Diagram build_from_gates(const GateList& g) {
  g.validate();
  GateList flat = expand_composites(g);
  Diagram d;
  std::vector<VertexId> frontier(g.qubits);
  std::vector<EdgeKind> pending(g.qubits, EdgeKind::Plain);
  for (int q = 0; q < g.qubits; ++q) frontier[q] = d.add_input();

  auto attach = [&](int q, VertexId w) {
    d.add_edge(frontier[q], w, pending[q]);
    frontier[q] = w;
    pending[q] = EdgeKind::Plain;
  };
  auto phase_on = [&](int q, int n) { attach(q, d.add_z(Phase(n))); };

  for (const Gate& x : flat.gates) {
    switch (x.type) {
      case GateType::CNOT: {
        VertexId c = d.add_z();
        VertexId t = d.add_x();
        attach(x.qubits[0], c);
        attach(x.qubits[1], t);
        d.add_edge(c, t, EdgeKind::Plain);
        d.scalar().mul_sqrt2_pow(1);
        break;
      }
      case GateType::T:
        phase_on(x.qubits[0], 1);
        break;
      case GateType::S:
        phase_on(x.qubits[0], 2);
        break;
      case GateType::Z:
        phase_on(x.qubits[0], 4);
        break;
      case GateType::Phase:
        phase_on(x.qubits[0], x.phase);
        break;
      case GateType::H:
        pending[x.qubits[0]] = toggled(pending[x.qubits[0]]);
        break;
      case GateType::Toffoli:
      case GateType::Sandwich:
        throw std::logic_error("composite gate survived expansion");
    }
  }
  for (int q = 0; q < g.qubits; ++q) {
    VertexId o = d.add_output();
    d.add_edge(frontier[q], o, pending[q]);
  }
  return d;
}

Diagram plug_basis_states(Diagram d, const Bits& in_bits, const Bits& out_bits) {
  if (in_bits.size() != d.inputs().size()) {
    throw InputError("expected " + std::to_string(d.inputs().size()) + " input bits, got " +
                     std::to_string(in_bits.size()));
  }
  if (out_bits.size() != d.outputs().size()) {
    throw InputError("expected " + std::to_string(d.outputs().size()) + " output bits, got " +
                     std::to_string(out_bits.size()));
  }
  auto plug = [&](VertexId b, bool bit) {
    d.set_kind(b, VertexKind::X);
    d.set_phase(b, Phase(bit ? 4 : 0));
    // X(b*pi) with one leg is sqrt(2)|b>.
    d.scalar().mul_sqrt2_pow(-1);
  };
  auto ins = d.inputs();
  auto outs = d.outputs();
  for (std::size_t i = 0; i < ins.size(); ++i) plug(ins[i], in_bits[i]);
  for (std::size_t i = 0; i < outs.size(); ++i) plug(outs[i], out_bits[i]);
  d.set_inputs({});
  d.set_outputs({});
  return d;
}

Diagram plug_zeros(Diagram d) {
  Bits in(d.inputs().size(), false);
  Bits out(d.outputs().size(), false);
  return plug_basis_states(std::move(d), in, out);
}

Diagram plug_plus(Diagram d) {
  std::vector<VertexId> ends = d.inputs();
  ends.insert(ends.end(), d.outputs().begin(), d.outputs().end());
  for (VertexId b : ends) {
    d.set_kind(b, VertexKind::Z);
    d.set_phase(b, Phase::zero());
    // Z(0) with one leg is sqrt(2)|+>.
    d.scalar().mul_sqrt2_pow(-1);
  }
  d.set_inputs({});
  d.set_outputs({});
  return d;
}

}  // namespace zxcut
