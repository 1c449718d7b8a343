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
#include "zxcut/circuit_gen.hpp"
#include "zxcut/cutter.hpp"
#include "zxcut/error.hpp"
#include "zxcut/fixtures.hpp"
#include "zxcut/oracle.hpp"
#include "zxcut/simplify.hpp"

namespace zxcut {
namespace {

std::vector<VertexId> z_spiders(const Diagram& d) {
  std::vector<VertexId> out;
  for (VertexId v : d.vertices()) {
    if (d.kind(v) == VertexKind::Z) out.push_back(v);
  }
  return out;
}

std::complex<double> expanded_sum(const ParamGraph& pg) {
  std::complex<double> s = 0;
  for_each_term(pg, [&](Diagram&& g) { s += evaluate_scalar(g); });
  return s;
}

TEST(CutVertex, BranchesSumToTheWhole) {
  std::mt19937_64 rng(12);
  int cuts = 0;
  for (int trial = 0; trial < 120; ++trial) {
    Diagram d = testing::random_scalar_diagram(rng, 3, 10 + static_cast<int>(rng() % 10));
    if (trial % 2) partial_simplify(d);
    const std::complex<double> ref = evaluate_scalar(d);
    for (VertexId v : z_spiders(d)) {
      CutBranchPair b = cut_vertex(d, v);
      ASSERT_FALSE(b.branch0.alive(v));
      ASSERT_TRUE(testing::close(evaluate_scalar(b.branch0) + evaluate_scalar(b.branch1), ref, 1e-9));
      ++cuts;
    }
  }
  EXPECT_GT(cuts, 500);
}

TEST(CutVertex, Rejects) {
  Diagram d = build_from_gates(parse_gate_list("QUBITS 2\nCNOT 0 1\n"));
  for (VertexId v : d.vertices()) {
    if (d.kind(v) != VertexKind::Z) {
      EXPECT_THROW(cut_vertex(d, v), PatternError);
    }
  }
  Diagram p;
  VertexId z = p.add_z(ParamPhase::param_pi(0));
  EXPECT_THROW(cut_vertex(p, z), PatternError);
  EXPECT_THROW(cut_vertex(p, 7), PatternError);
}

TEST(ParamCut, AssignmentsAreTheConcreteBranches) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    Diagram d = testing::random_scalar_diagram(rng, 3, 14);
    partial_simplify(d);
    auto zs = z_spiders(d);
    if (zs.empty()) continue;
    const VertexId v = zs[rng() % zs.size()];
    ParamGraph pg = param_cut(ParamGraph(d), v);
    ASSERT_EQ(pg.num_live(), 1u);
    const ParamId p = *pg.live_params.begin();
    CutBranchPair b = cut_vertex(d, v);
    ASSERT_TRUE(testing::close(evaluate_scalar(assign(pg, {{p, false}})), evaluate_scalar(b.branch0), 1e-9));
    ASSERT_TRUE(testing::close(evaluate_scalar(assign(pg, {{p, true}})), evaluate_scalar(b.branch1), 1e-9));
  }
}

// Several parametric cuts, exact simplification and elimination keep the sum
// over assignments equal to the original value.
TEST(ParamCut, SimplifyAndEliminateKeepTheSum) {
  std::mt19937_64 rng(14);
  int eliminated = 0;
  for (int trial = 0; trial < 80; ++trial) {
    // Basis-plugged random circuits mostly copy away to nothing; these keep
    // their CNOT structure.
    Diagram d = plug_plus(build_from_gates(generate({3, 2 + trial % 2, 0, 2, 2, static_cast<std::uint64_t>(trial)})));
    partial_simplify(d);
    const std::complex<double> ref = evaluate_scalar(d);
    ParamGraph pg(d);
    for (int c = 0; c < 3; ++c) {
      auto zs = z_spiders(pg.diagram);
      std::erase_if(zs, [&](VertexId v) { return !pg.diagram.phase(v).is_concrete(); });
      if (zs.empty()) break;
      pg = param_cut(std::move(pg), zs[rng() % zs.size()]);
      partial_simplify(pg.diagram);
      ASSERT_TRUE(testing::close(expanded_sum(pg), ref, 1e-9)) << trial;
    }
    const std::size_t before = pg.num_live();
    pg = eliminate_params(std::move(pg));
    eliminated += static_cast<int>(before - pg.num_live());
    ASSERT_TRUE(testing::close(expanded_sum(pg), ref, 1e-9)) << trial;
  }
  EXPECT_GT(eliminated, 0);
}

TEST(ParamCut, DuplicateParameterThrows) {
  Diagram d = fixtures::prepared(fixtures::sandwich());
  auto zs = z_spiders(d);
  ASSERT_GE(zs.size(), 2u);
  ParamGraph pg = param_cut(ParamGraph(d), zs[0], 3);
  EXPECT_EQ(pg.next_param, 4);
  EXPECT_THROW(param_cut(pg, zs[1], 3), PatternError);
}

TEST(Eliminate, ConstraintsAndSubstitutions) {
  // X(a xor b) and Z(pi + b) as legless spiders: a xor b = 0, b = 1.
  ParamGraph pg;
  pg.diagram.add_x(ParamPhase(Phase(0), Parity::of({0, 1})));
  pg.diagram.add_z(ParamPhase(Phase(4), Parity::of({1})));
  VertexId t = pg.diagram.add_z(ParamPhase(Phase(1), Parity::of({0})));
  VertexId u = pg.diagram.add_z(Phase(0));
  pg.diagram.add_edge(t, u, EdgeKind::Hadamard);
  pg.live_params = {0, 1};
  pg.next_param = 2;
  auto cs = extract_constraints(pg);
  ASSERT_EQ(cs.size(), 2u);
  const std::complex<double> ref = expanded_sum(pg);
  ParamGraph e = eliminate_params(pg);
  EXPECT_EQ(e.num_live(), 0u);
  EXPECT_EQ(e.substitutions.size(), 2u);
  EXPECT_TRUE(testing::close(expanded_sum(e), ref, 1e-12));
}

TEST(Eliminate, InconsistentSystemIsZero) {
  ParamGraph pg;
  pg.diagram.add_x(ParamPhase(Phase(0), Parity::of({0})));
  pg.diagram.add_x(ParamPhase(Phase(4), Parity::of({0})));
  pg.live_params = {0};
  pg.next_param = 1;
  ParamGraph e = eliminate_params(pg);
  EXPECT_TRUE(e.is_zero());
  EXPECT_NEAR(std::abs(expanded_sum(pg)), 0, 1e-12);
}

TEST(Expand, Limits) {
  ParamGraph pg;
  for (int i = 0; i < 17; ++i) pg.live_params.insert(i);
  EXPECT_THROW(expand(pg), LimitError);
}

// The tiered fixture cut in a poor order: four wire controls, then the hub.
// Elimination recovers the two-parameter form.
TEST(Eliminate, TieredFixtureSuboptimalOrder) {
  Diagram d = fixtures::prepared(fixtures::tiered());
  const fixtures::TieredLabels L = fixtures::label_tiered(d);
  ASSERT_EQ(L.wire_controls.size(), 4u);
  const std::complex<double> ref = evaluate_scalar(d);
  ParamGraph pg(d);
  for (VertexId v : L.wire_controls) pg = param_cut(std::move(pg), v);
  spider_simp(pg.diagram);
  pg = param_cut(std::move(pg), L.hub);
  partial_simplify(pg.diagram);
  EXPECT_EQ(pg.num_live(), 5u);
  pg = eliminate_params(std::move(pg));
  EXPECT_EQ(pg.num_live(), 2u);
  auto terms = expand(pg);
  ASSERT_EQ(terms.size(), 4u);
  std::complex<double> s = 0;
  for (const auto& g : terms) s += evaluate_scalar(g);
  EXPECT_TRUE(testing::close(s, ref, 1e-9));
}

}  // namespace
}  // namespace zxcut
