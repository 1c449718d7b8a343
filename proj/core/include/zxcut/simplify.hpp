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

#include <functional>
#include <vector>

#include "zxcut/diagram.hpp"
#include "zxcut/rewrite.hpp"

namespace zxcut {

using FuseObserver = std::function<void(VertexId survivor, VertexId absorbed)>;

struct PartialOptions {
  PhaseMerge merge = PhaseMerge::Exact;
  /// Copy basis states through spiders of the other colour.
  bool state_copy = true;
  FuseObserver on_fuse;
  std::vector<RuleApplication>* log = nullptr;
};

/// Fuses plain-adjacent spiders of equal colour to a fixed point. The lower
/// id survives. Returns the number of fusions.
std::size_t spider_simp(Diagram& d, const PartialOptions& opts = {});

/// All spiders Z, spider-spider edges Hadamard, no phase-0 degree-2 spiders.
void to_graph_like(Diagram& d, std::vector<RuleApplication>* log = nullptr);

/// Clifford reduction: graph-like form, then fusion, identity removal, state
/// copy, local complementation and pivoting to a fixed point. Never increases
/// the T-count.
void full_simplify(Diagram& d, std::vector<RuleApplication>* log = nullptr);

/// Structure-preserving reduction that keeps CNOT patterns intact.
void partial_simplify(Diagram& d, const PartialOptions& opts = {});

/// Value of a concrete Clifford scalar diagram, computed by rewriting alone.
/// Throws PatternError on T-like phases, parameters or open boundaries.
Scalar reduce_scalar_clifford(Diagram d);

}  // namespace zxcut
