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
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zxcut/cutter.hpp"
#include "zxcut/decomposer.hpp"
#include "zxcut/diagram.hpp"

namespace zxcut {

/// blind: one parametric graph with lossy phase merging, 2^cuts times the
/// residual estimate. exact: the blind path, with every one of its branches
/// rebuilt on concrete phases and summed. parametric: as blind, with parity
/// constraints eliminated after every cut.
enum class ProcedureMode { Exact, Blind, Parametric };

const char* to_string(ProcedureMode m);

struct CutRecord {
  VertexId vertex = -1;
  int tier = 0;
  double weight = 0.0;
  /// Number of cuts before this one.
  int depth = 0;
  std::optional<ParamId> param;
};

struct ProcedureOptions {
  /// Cuts along any one branch.
  std::size_t max_cuts = 64;
  /// Exact mode: total terms across all leaves.
  Count max_terms = Count(1) << 20;
};

struct ProcedureReport {
  ProcedureMode mode = ProcedureMode::Exact;
  std::vector<CutRecord> cuts;
  std::size_t cut_depth = 0;
  /// T-count after the initial partial simplification.
  std::size_t t_start = 0;
  /// Largest T-count handed to the fallback.
  std::size_t residual_t = 0;
  std::size_t leaves = 0;
  Count terms = 0;
  std::optional<double> alpha;
  bool complete = true;
  std::string incomplete_reason;
  /// Exact mode.
  std::optional<std::complex<double>> value;
  /// Parametric mode.
  std::optional<ParamGraph> param_graph;
};

ProcedureReport run_procedure(const Diagram& d, ProcedureMode mode, const ProcedureOptions& opts = {});

/// Lossy partial simplification and parameter elimination to a joint fixed point.
void settle(ParamGraph& pg);

/// 2^live * blind_estimate_bss(T-count); a zero graph counts one term.
Count parametric_count(const ParamGraph& pg);

}  // namespace zxcut
