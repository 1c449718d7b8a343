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

#include <sstream>

#include "zxcut/bench.hpp"
#include "zxcut/error.hpp"
#include "zxcut/fixtures.hpp"
#include "zxcut/oracle.hpp"

namespace zxcut {
namespace {

TEST(BruteForce, Sandwich) {
  Diagram d = fixtures::prepared(fixtures::sandwich());
  BruteForceResult r = brute_force_optimal(d, 16, 2);
  EXPECT_EQ(r.best_terms, 2);
  ASSERT_EQ(r.best_set.size(), 1u);
  EXPECT_EQ(d.phase(r.best_set[0]).base, Phase(2));
  EXPECT_EQ(r.subsets, std::size_t{1} << r.candidates);
}

TEST(BruteForce, CliffordNeedsNoCut) {
  Diagram d = plug_zeros(build_from_gates(parse_gate_list("QUBITS 2\nH 0\nCNOT 0 1\nS 1\nH 1\n")));
  BruteForceResult r = brute_force_optimal(d);
  EXPECT_EQ(r.best_terms, 1);
  EXPECT_TRUE(r.best_set.empty());
}

TEST(BruteForce, TieredFixture) {
  Diagram d = fixtures::prepared(fixtures::tiered());
  BruteForceResult r = brute_force_optimal(d);
  EXPECT_EQ(r.best_terms, 4);
  OptimalityRow row = optimality_trial(d);
  EXPECT_TRUE(row.success);
  EXPECT_EQ(row.proc_terms, 4);
}

TEST(BruteForce, CapIsEnforced) {
  Diagram d = fixtures::prepared(fixtures::tiered());
  EXPECT_THROW(brute_force_optimal(d, 3), LimitError);
}

TEST(BruteForce, ThreadCountDoesNotMatter) {
  GenSpec s{3, 2, 0, 2, 2, 5};
  for (int i = 0; i < 10; ++i) {
    s.seed = 5 + static_cast<std::uint64_t>(i);
    Diagram d = plug_plus(build_from_gates(generate_small_verifiable(s).gates));
    BruteForceResult a = brute_force_optimal(d, 16, 1);
    BruteForceResult b = brute_force_optimal(d, 16, 4);
    EXPECT_EQ(a.best_terms, b.best_terms);
    EXPECT_EQ(a.best_set, b.best_set);
  }
}

TEST(Optimality, StudyIsReproducible) {
  GenSpec s{3, 2, 0, 2, 2, 1};
  OptimalityStudy a = optimality_study(20, s, 16, 1);
  OptimalityStudy b = optimality_study(20, s, 16, 3);
  ASSERT_EQ(a.rows.size(), 20u);
  EXPECT_DOUBLE_EQ(a.success_rate, b.success_rate);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].proc_terms, b.rows[i].proc_terms);
    EXPECT_LE(a.rows[i].best_terms, a.rows[i].proc_terms);
  }
}

SweepConfig small_sweep() {
  return parse_sweep_config(R"({"budget": 4096, "threads": 2,
    "sweep": {"qubits": 4, "scales": [1, 2], "ratio": [2, 1, 2, 2], "seeds": 3, "seed": 70}})");
}

TEST(Sweep, CsvIsReproducible) {
  SweepConfig cfg = small_sweep();
  ASSERT_EQ(cfg.specs.size(), 6u);
  const std::string a = bench_csv(bench_sweep(cfg), false);
  cfg.threads = 1;
  const std::string b = bench_csv(bench_sweep(cfg), false);
  EXPECT_EQ(a, b);
  std::istringstream in(a);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header,
            "seed,t_initial,terms_bss_exact,terms_bss_blind,terms_proc_exact,terms_proc_blind,alpha_bss_exact,"
            "alpha_bss_blind,alpha_proc_exact,alpha_proc_blind,amplitude_bss_re,amplitude_bss_im,"
            "amplitude_proc_re,amplitude_proc_im,status");
  int lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  EXPECT_EQ(lines, 6);
  EXPECT_NE(bench_csv(bench_sweep(cfg), true).find("time_bss_exact"), std::string::npos);
}

TEST(Sweep, RowInvariants) {
  for (const BenchRow& r : bench_sweep(small_sweep())) {
    if (r.terms_bss_exact) {
      EXPECT_LE(*r.terms_bss_exact, r.terms_bss_blind);
    }
    if (r.terms_proc_exact) {
      EXPECT_LE(*r.terms_proc_exact, r.terms_proc_blind);
    }
    if (r.amplitude_bss && r.amplitude_proc) {
      EXPECT_LT(std::abs(*r.amplitude_bss - *r.amplitude_proc), 1e-7);
    }
  }
}

TEST(Sweep, PlotData) {
  const std::string j = plot_data_json(bench_sweep(small_sweep()));
  EXPECT_NE(j.find("\"points\""), std::string::npos);
  EXPECT_NE(j.find("bss_ideal"), std::string::npos);
}

TEST(Sweep, ConfigErrors) {
  EXPECT_THROW(parse_sweep_config("{"), InputError);
  EXPECT_THROW(parse_sweep_config(R"({"specs": [{"sandwiches": 1}]})"), InputError);
  EXPECT_THROW(parse_sweep_config(R"({"specs": [{"qubits": 1, "sandwiches": 1}]})"), InputError);
  EXPECT_THROW(parse_sweep_config(R"({"sweep": {"qubits": 4, "scales": [1], "ratio": [1, 2]}})"), InputError);
  SweepConfig c = parse_sweep_config(R"({"exact": false, "specs": [{"qubits": 3, "cnots": 2, "seed": 4}]})");
  EXPECT_FALSE(c.exact);
  ASSERT_EQ(c.specs.size(), 1u);
  EXPECT_EQ(c.specs[0], (GenSpec{3, 0, 0, 2, 0, 4}));
}

}  // namespace
}  // namespace zxcut
