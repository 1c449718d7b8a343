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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "zxcut/circuit.hpp"
#include "zxcut/error.hpp"
#include "zxcut/oracle.hpp"

namespace zxcut {
namespace {

TEST(Oracle, SingleSpiders) {
  Diagram d;
  VertexId i = d.add_input();
  VertexId z = d.add_z(Phase(2));
  VertexId o = d.add_output();
  d.add_edge(i, z, EdgeKind::Plain);
  d.add_edge(z, o, EdgeKind::Plain);
  DenseMap m = evaluate(d);
  EXPECT_NEAR(std::abs(m.at(0, 0) - 1.0), 0, 1e-12);
  EXPECT_NEAR(std::abs(m.at(1, 1) - std::complex<double>(0, 1)), 0, 1e-12);
  EXPECT_NEAR(std::abs(m.at(0, 1)), 0, 1e-12);

  Diagram h;
  VertexId hi = h.add_input();
  VertexId ho = h.add_output();
  h.add_edge(hi, ho, EdgeKind::Hadamard);
  DenseMap hm = evaluate(h);
  const double r = 1 / std::sqrt(2.0);
  EXPECT_NEAR(hm.at(0, 0).real(), r, 1e-12);
  EXPECT_NEAR(hm.at(1, 1).real(), -r, 1e-12);

  // Legless spiders: Z(a) -> 1 + e^{ia}.
  Diagram s;
  s.add_x(Phase(4));
  EXPECT_NEAR(std::abs(evaluate_scalar(s)), 0, 1e-12);
  Diagram t;
  t.add_z(Phase(2));
  EXPECT_NEAR(std::abs(evaluate_scalar(t) - std::complex<double>(1, 1)), 0, 1e-12);
}

TEST(Oracle, CnotMatrix) {
  DenseMap m = circuit_matrix(parse_gate_list("QUBITS 2\nCNOT 0 1\n"));
  DenseMap z = evaluate(build_from_gates(parse_gate_list("QUBITS 2\nCNOT 0 1\n")));
  EXPECT_LT(max_abs_diff(m, z), 1e-12);
  EXPECT_NEAR(std::abs(m.at(3, 2) - 1.0), 0, 1e-12);
  EXPECT_NEAR(std::abs(m.at(2, 3) - 1.0), 0, 1e-12);
}

// Tensor contraction and statevector simulation agree.
TEST(Oracle, DualPathAgreement) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 220; ++trial) {
    const int qubits = 1 + trial % 5;
    GateList g = testing::random_circuit(rng, std::max(qubits, 2), 4 + static_cast<int>(rng() % 20));
    if (trial % 7 == 0) g.gates.push_back(Gate::toffoli(0, 1 % g.qubits, g.qubits - 1));
    if (trial % 7 == 0 && g.qubits < 3) g.gates.pop_back();
    DenseMap a = evaluate(build_from_gates(g));
    DenseMap b = circuit_matrix(g);
    ASSERT_LT(max_abs_diff(a, b), 1e-9) << format_gate_list(g);
  }
}

TEST(Oracle, Limits) {
  GateList g;
  g.qubits = 7;
  Diagram d = build_from_gates(g);
  EXPECT_THROW(evaluate(d), LimitError);
  OracleLimits wide;
  wide.max_boundaries = 14;
  EXPECT_NO_THROW(evaluate(d, wide));
  EXPECT_THROW(evaluate_scalar(d), PatternError);
}

TEST(Oracle, ParametricDiagramsAreRejected) {
  Diagram d;
  d.add_z(ParamPhase::param_pi(0));
  EXPECT_THROW(evaluate_scalar(d), PatternError);
}

}  // namespace
}  // namespace zxcut
