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

#include "zxcut/cutter.hpp"
#include "zxcut/fixtures.hpp"
#include "zxcut/heuristic.hpp"
#include "zxcut/simplify.hpp"

namespace zxcut {
namespace {

TEST(BlockedPairs, Sandwich) {
  Diagram d = fixtures::prepared(fixtures::sandwich());
  auto pairs = find_blocked_pairs(d, is_t_endpoint);
  ASSERT_EQ(pairs.size(), 1u);
  const BlockedPair& p = pairs[0];
  EXPECT_EQ(p.k, 1);
  ASSERT_EQ(p.blockers.size(), 1u);
  EXPECT_TRUE(d.phase(p.u).is_t_like());
  EXPECT_TRUE(d.phase(p.w).is_t_like());
  const VertexId control = p.blockers[0].opposite_end;
  EXPECT_EQ(d.kind(control), VertexKind::Z);
  EXPECT_EQ(d.kind(p.blockers[0].connector), VertexKind::X);
  EXPECT_EQ(d.phase(control).base, Phase(2));
}

TEST(BlockedPairs, NoXSpidersNoPairs) {
  Diagram d;
  VertexId a = d.add_z(Phase(1));
  VertexId b = d.add_z(Phase(1));
  d.add_edge(a, b, EdgeKind::Hadamard);
  EXPECT_TRUE(find_blocked_pairs(d, is_t_endpoint).empty());
}

TEST(BlockedPairs, ThreeCnotChain) {
  Diagram d = fixtures::prepared(fixtures::cnot_chain(3));
  auto pairs = find_blocked_pairs(d, is_t_endpoint);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].k, 3);
  EXPECT_EQ(pairs[0].blockers.size(), 3u);
  WeightTable wt = assign_tier0(d);
  for (const Blocker& b : pairs[0].blockers) EXPECT_DOUBLE_EQ(wt.weight(b.opposite_end, 0), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(wt.total_weight(), 2.0);
}

TEST(Weights, Gamma) {
  EXPECT_DOUBLE_EQ(gamma(0.0), 0.0);
  EXPECT_DOUBLE_EQ(gamma(1.0), 0.5);
  EXPECT_DOUBLE_EQ(gamma(2.0), 1.0);
  EXPECT_DOUBLE_EQ(gamma(7.0), 1.0);
}

TEST(Weights, SandwichControl) {
  Diagram d = fixtures::prepared(fixtures::sandwich());
  WeightTable wt = compute_weights(d);
  const VertexId control = find_blocked_pairs(d, is_t_endpoint)[0].blockers[0].opposite_end;
  EXPECT_DOUBLE_EQ(wt.max_weight(control), 2.0);
  EXPECT_EQ(wt.max_tier(control), 0);
  EXPECT_EQ(wt.num_tiers(), 1u);
  auto c = select_cut(wt, d);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->vertex, control);
  EXPECT_EQ(c->tier, 0);
}

TEST(Weights, TSpiderControlGetsTheBoost) {
  Diagram d = fixtures::prepared(fixtures::t_control_sandwich());
  auto c = select_cut(compute_weights(d), d);
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(d.phase(c->vertex).is_t_like());
  EXPECT_DOUBLE_EQ(c->weight, 3.0);
}

// Hand trace: seven tier-0 blockers of weight 2 (four qubit-1 controls, three
// side controls); the four qubit-1 controls are blocked pairs through qubit 5,
// whose tier-1 weight is 4 * gamma(2) / 1 = 4.
TEST(Weights, TieredFixture) {
  Diagram d = fixtures::prepared(fixtures::tiered());
  const fixtures::TieredLabels L = fixtures::label_tiered(d);
  ASSERT_EQ(L.t_spiders.size(), 8u);
  WeightTable wt = compute_weights(d);
  ASSERT_GE(wt.num_tiers(), 2u);
  EXPECT_EQ(wt.tier(0).size(), 7u);
  for (VertexId v : L.wire_controls) EXPECT_DOUBLE_EQ(wt.weight(v, 0), 2.0);
  for (VertexId v : L.side_controls) EXPECT_DOUBLE_EQ(wt.weight(v, 0), 2.0);
  EXPECT_EQ(wt.tier(1).size(), 1u);
  EXPECT_DOUBLE_EQ(wt.weight(L.hub, 1), 4.0);
  EXPECT_EQ(wt.max_tier(L.hub), 1);
  auto c = select_cut(wt, d);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->vertex, L.hub);
  EXPECT_EQ(c->tier, 1);
}

TEST(Weights, SelectCutNeedsWeightTwo) {
  Diagram d = fixtures::prepared(fixtures::cnot_chain(3));
  // Three blockers of 2/3 each: nothing reaches 2.
  EXPECT_FALSE(select_cut(compute_weights(d), d).has_value());
  Diagram empty;
  EXPECT_FALSE(select_cut(compute_weights(empty), empty).has_value());
}

TEST(Weights, MergeOnFuseSums) {
  WeightTable wt;
  wt.push_tier({{1, 2.0}, {2, 1.0}}, {{1, {10}}, {2, {11}}});
  wt.push_tier({{2, 0.5}}, {{2, {1}}});
  merge_on_fuse(wt, 1, 2);
  EXPECT_DOUBLE_EQ(wt.weight(1, 0), 3.0);
  EXPECT_DOUBLE_EQ(wt.weight(1, 1), 0.5);
  EXPECT_DOUBLE_EQ(wt.weight(2, 0), 0.0);
  EXPECT_DOUBLE_EQ(wt.max_weight(1), 3.0);
  EXPECT_EQ(wt.max_tier(1), 1);
  EXPECT_EQ(wt.children(1), (std::set<VertexId>{1, 10, 11}));
}

TEST(Weights, ReweighAfterCutKeepsBranchWeights) {
  Diagram d = fixtures::prepared(fixtures::tiered());
  const fixtures::TieredLabels L = fixtures::label_tiered(d);
  WeightTable wt = compute_weights(d);
  CutBranchPair b = cut_vertex(d, L.hub);
  Diagram g = std::move(b.branch0);
  PartialOptions o;
  o.on_fuse = [&wt](VertexId s, VertexId a) { merge_on_fuse(wt, s, a); };
  partial_simplify(g, o);
  WeightTable fresh = reweigh(wt, g);
  for (const auto& [v, s] : fresh.summaries()) EXPECT_TRUE(g.alive(v)) << v;
  auto c = select_cut(fresh, g);
  ASSERT_TRUE(c.has_value());
  EXPECT_DOUBLE_EQ(c->weight, 8.0);
}

}  // namespace
}  // namespace zxcut
