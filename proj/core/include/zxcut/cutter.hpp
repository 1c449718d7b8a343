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

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "zxcut/diagram.hpp"
#include "zxcut/rewrite.hpp"

namespace zxcut {

struct CutBranchPair {
  Diagram branch0;
  Diagram branch1;
};

/// Splits the Z-spider v into its two leg assignments. value(branch0) +
/// value(branch1) = value(d). Throws PatternError for boundaries, X-spiders
/// and parametric phases.
CutBranchPair cut_vertex(const Diagram& d, VertexId v);

/// A parameter eliminated as `param = expr XOR constant`.
struct Substitution {
  Parity expr;
  bool constant = false;
  friend bool operator==(const Substitution&, const Substitution&) = default;
};

/// One diagram standing for the sum over every assignment of its live
/// parameters.
struct ParamGraph {
  Diagram diagram;
  std::set<ParamId> live_params;
  std::map<ParamId, Substitution> substitutions;
  ParamId next_param = 0;

  ParamGraph() = default;
  explicit ParamGraph(Diagram d);

  /// Every term is zero.
  bool is_zero() const { return diagram.scalar().is_zero(); }
  std::size_t num_live() const { return live_params.size(); }

  friend bool operator==(const ParamGraph&, const ParamGraph&) = default;
};

/// Parametric cut with a fresh parameter (next_param unless given). Under
/// PhaseMerge::Lossy a parametric v is accepted and the scalar becomes opaque.
ParamGraph param_cut(ParamGraph pg, VertexId v, std::optional<ParamId> new_param = std::nullopt,
                     PhaseMerge merge = PhaseMerge::Exact);

/// XOR of `params` must equal `parity` for the term to be non-zero.
struct ParityConstraint {
  Parity params;
  bool parity = false;
  friend bool operator==(const ParityConstraint&, const ParityConstraint&) = default;
};

std::vector<ParityConstraint> extract_constraints(const ParamGraph& pg);

/// Solves the constraints over GF(2) and substitutes the pivots out. Live
/// parameters that no longer occur anywhere are summed into a factor of 2.
/// Inconsistent systems make the scalar zero.
ParamGraph eliminate_params(ParamGraph pg);

/// The concrete diagram for one assignment of the live parameters.
Diagram assign(const ParamGraph& pg, const Assignment& a);

/// Calls f on every assignment's concrete diagram in binary order of the live
/// parameters (lowest id most significant). Throws LimitError above max_live.
void for_each_term(const ParamGraph& pg, const std::function<void(Diagram&&)>& f, std::size_t max_live = 20);
std::vector<Diagram> expand(const ParamGraph& pg, std::size_t max_live = 16);

}  // namespace zxcut
