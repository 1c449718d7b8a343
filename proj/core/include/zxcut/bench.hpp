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

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zxcut/circuit_gen.hpp"
#include "zxcut/decomposer.hpp"
#include "zxcut/diagram.hpp"

namespace zxcut {

struct BruteForceResult {
  std::vector<VertexId> best_set;
  Count best_terms = 0;
  std::size_t candidates = 0;
  std::size_t subsets = 0;
};

/// Tries every subset of Z-spiders of the partially simplified d: parametric
/// cuts on all members, then simplification with parity elimination, costed
/// as 2^live * blind_estimate_bss(residual T). Ties go to smaller sets, then
/// to the lower bitmask. threads = 0 uses the hardware concurrency.
BruteForceResult brute_force_optimal(const Diagram& d, std::size_t cap = 16, unsigned threads = 0);

struct OptimalityRow {
  int index = 0;
  std::uint64_t seed = 0;
  std::size_t z_spiders = 0;
  std::size_t t_count = 0;
  Count proc_terms = 0;
  Count best_terms = 0;
  std::vector<VertexId> best_set;
  bool success = false;
};

struct OptimalityStudy {
  std::vector<OptimalityRow> rows;
  double success_rate = 0.0;
};

/// Instance i is generate_small_verifiable with seed spec.seed + i, plugged
/// with plus states.
OptimalityStudy optimality_study(int trials, const GenSpec& spec, std::size_t cap = 16, unsigned threads = 0);
OptimalityRow optimality_trial(const Diagram& d, std::size_t cap = 16, unsigned threads = 0);

struct BenchRow {
  std::uint64_t seed = 0;
  std::size_t t_initial = 0;
  std::optional<Count> terms_bss_exact;
  Count terms_bss_blind = 0;
  std::optional<Count> terms_proc_exact;
  Count terms_proc_blind = 0;
  std::optional<double> alpha_bss_exact;
  std::optional<double> alpha_bss_blind;
  std::optional<double> alpha_proc_exact;
  std::optional<double> alpha_proc_blind;
  double time_bss_exact = 0.0;
  double time_bss_blind = 0.0;
  double time_proc_exact = 0.0;
  double time_proc_blind = 0.0;
  std::optional<std::complex<double>> amplitude_bss;
  std::optional<std::complex<double>> amplitude_proc;
  /// "ok", or what was skipped or failed.
  std::string status = "ok";
};

struct SweepConfig {
  std::vector<GenSpec> specs;
  /// Exact columns are computed only when the blind estimate is within budget.
  Count budget = Count(1) << 20;
  bool exact = true;
  bool blind = true;
  unsigned threads = 0;
};

/// specs scaled by 1..n of the ratio sandwiches:toffolis:cnots:phases.
std::vector<GenSpec> scaled_specs(int qubits, const std::vector<int>& scales, const std::vector<int>& ratio,
                                  int seeds_per_scale, std::uint64_t seed);

/// JSON: {"budget", "exact", "blind", "threads", "specs": [...], "sweep": {"qubits",
/// "scales", "ratio", "seeds", "seed"}}. Throws InputError.
SweepConfig parse_sweep_config(std::string_view text);

BenchRow bench_one(const GateList& g, std::uint64_t seed, const SweepConfig& cfg);
/// Rows in spec order; failures are recorded in status.
std::vector<BenchRow> bench_sweep(const SweepConfig& cfg);

std::string bench_csv(const std::vector<BenchRow>& rows, bool timing = true);
/// Points for the terms-vs-t and alpha-vs-t panels, plus the 2^(0.468t) curve.
std::string plot_data_json(const std::vector<BenchRow>& rows);

}  // namespace zxcut
