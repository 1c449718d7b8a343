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

#include <random>

#include "support.hpp"
#include "zxcut/error.hpp"
#include "zxcut/oracle.hpp"
#include "zxcut/simplify.hpp"

namespace zxcut {
namespace {

TEST(FullSimplify, PreservesValueAndNeverRaisesTCount) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 240; ++trial) {
    Diagram d = trial % 2 ? testing::random_plus_diagram(rng, 2 + trial % 4, 6 + static_cast<int>(rng() % 24))
                          : testing::random_scalar_diagram(rng, 2 + trial % 4, 6 + static_cast<int>(rng() % 24));
    const std::complex<double> ref = evaluate_scalar(d);
    const std::size_t t0 = d.t_count();
    full_simplify(d);
    ASSERT_LE(d.t_count(), t0) << trial;
    ASSERT_TRUE(testing::close(evaluate_scalar(d), ref, 1e-9)) << trial;
  }
}

TEST(FullSimplify, IsIdempotent) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    Diagram d = testing::random_scalar_diagram(rng, 4, 20);
    full_simplify(d);
    Diagram e = d;
    std::vector<RuleApplication> log;
    full_simplify(e, &log);
    EXPECT_TRUE(log.empty()) << trial << " first rule " << log.front().rule;
    EXPECT_TRUE(e == d);
  }
}

TEST(FullSimplify, OpenDiagramsKeepTheirMatrix) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    GateList g = testing::random_circuit(rng, 3, 16);
    Diagram d = build_from_gates(g);
    full_simplify(d);
    ASSERT_LT(max_abs_diff(evaluate(d), circuit_matrix(g)), 1e-9);
  }
}

TEST(GraphLike, Shape) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    Diagram d = testing::random_scalar_diagram(rng, 3, 15);
    const std::complex<double> ref = evaluate_scalar(d);
    to_graph_like(d);
    for (VertexId v : d.vertices()) {
      ASSERT_EQ(d.kind(v), VertexKind::Z);
      for (const auto& [w, k] : d.neighbours(v)) ASSERT_EQ(k, EdgeKind::Hadamard);
      ASSERT_FALSE(d.degree(v) == 2 && d.phase(v).is_zero());
    }
    ASSERT_TRUE(testing::close(evaluate_scalar(d), ref, 1e-9));
  }
}

TEST(PartialSimplify, PreservesValueAndSettles) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    Diagram d = trial % 2 ? testing::random_plus_diagram(rng, 2 + trial % 4, 6 + static_cast<int>(rng() % 24))
                          : testing::random_scalar_diagram(rng, 2 + trial % 4, 6 + static_cast<int>(rng() % 24));
    const std::complex<double> ref = evaluate_scalar(d);
    const std::size_t t0 = d.t_count();
    partial_simplify(d);
    ASSERT_LE(d.t_count(), t0);
    ASSERT_TRUE(testing::close(evaluate_scalar(d), ref, 1e-9)) << trial;
    std::vector<RuleApplication> log;
    PartialOptions o;
    o.log = &log;
    partial_simplify(d, o);
    ASSERT_TRUE(log.empty()) << log.front().rule;
  }
}

TEST(PartialSimplify, KeepsCnotStructure) {
  // T - CNOT - T: the target stays an X-spider between the two T spiders.
  Diagram d = build_from_gates(parse_gate_list("QUBITS 2\nT 1\nCNOT 0 1\nT 1\n"));
  partial_simplify(d);
  EXPECT_EQ(d.t_count(), 2u);
  int xs = 0;
  for (VertexId v : d.vertices()) xs += d.kind(v) == VertexKind::X;
  EXPECT_EQ(xs, 1);
}

TEST(ReduceScalarClifford, MatchesOracle) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 150; ++trial) {
    Diagram d = testing::random_scalar_diagram(rng, 2 + trial % 4, 5 + static_cast<int>(rng() % 25), false);
    ASSERT_TRUE(testing::close(reduce_scalar_clifford(d).value(), evaluate_scalar(d), 1e-9)) << trial;
  }
}

TEST(ReduceScalarClifford, RejectsNonClifford) {
  Diagram d;
  d.add_z(Phase(1));
  EXPECT_THROW(reduce_scalar_clifford(d), PatternError);
  Diagram e = build_from_gates(parse_gate_list("QUBITS 1\nS 0\n"));
  EXPECT_THROW(reduce_scalar_clifford(e), PatternError);
}

}  // namespace
}  // namespace zxcut
