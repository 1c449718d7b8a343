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

#include <functional>
#include <map>
#include <random>

#include "rule_matches.hpp"
#include "support.hpp"
#include "zxcut/error.hpp"
#include "zxcut/oracle.hpp"
#include "zxcut/rewrite.hpp"
#include "zxcut/simplify.hpp"

namespace zxcut {
namespace {

TEST(Rules, Fuse) { EXPECT_EQ(testing::rules::check("fuse", testing::rules::try_fuse), ""); }

TEST(Rules, ColorChange) { EXPECT_EQ(testing::rules::check("color_change", testing::rules::try_color_change), ""); }

TEST(Rules, PiCommute) { EXPECT_EQ(testing::rules::check("pi_commute", testing::rules::try_pi_commute), ""); }

TEST(Rules, IdentityRemove) { EXPECT_EQ(testing::rules::check("identity_remove", testing::rules::try_identity_remove), ""); }

TEST(Rules, HadamardCancel) { EXPECT_EQ(testing::rules::check("hadamard_cancel", testing::rules::try_hadamard_cancel), ""); }

TEST(Rules, StateCopy) { EXPECT_EQ(testing::rules::check("state_copy", testing::rules::try_state_copy), ""); }

TEST(Rules, Bialgebra) { EXPECT_EQ(testing::rules::check("bialgebra", testing::rules::try_bialgebra), ""); }

TEST(Rules, LocalComplement) { EXPECT_EQ(testing::rules::check("local_complement", testing::rules::try_local_complement), ""); }

TEST(Rules, Pivot) { EXPECT_EQ(testing::rules::check("pivot", testing::rules::try_pivot), ""); }

TEST(Rules, RemoveScalarSpider) { EXPECT_EQ(testing::rules::check("remove_scalar_spider", testing::rules::try_remove_scalar_spider), ""); }

TEST(Rules, MismatchThrows) {
  Diagram d;
  VertexId a = d.add_z(Phase(1));
  VertexId b = d.add_x(Phase(1));
  d.add_edge(a, b, EdgeKind::Hadamard);
  EXPECT_THROW(fuse(d, a, b), PatternError);
  EXPECT_THROW(identity_remove(d, a), PatternError);
  EXPECT_THROW(pi_commute(d, a, b), PatternError);
  EXPECT_THROW(local_complement(d, a), PatternError);
  EXPECT_THROW(pivot(d, a, b), PatternError);
  EXPECT_THROW(state_copy(d, a), PatternError);
}

TEST(Rules, SideFactorIsTheScalarChange) {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 60; ++round) {
    Diagram d = testing::rules::source(rng, round);
    std::vector<RuleApplication> log;
    Diagram e = d;
    full_simplify(e, &log);
    Diagram r = d;
    for (const auto& app : log) {
      const std::complex<double> before = r.scalar().value();
      replay(r, app);
      ASSERT_TRUE(testing::close(r.scalar().value(), before * app.side_factor.value(), 1e-9)) << app.rule;
    }
    ASSERT_TRUE(r == e);
  }
}

}  // namespace
}  // namespace zxcut
