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

#include <string>
#include <vector>

#include "zxcut/diagram.hpp"

namespace zxcut {

/// How to combine phases that cannot be summed exactly (two T-like phases
/// negated under different parameters). Lossy keeps only the class.
enum class PhaseMerge { Exact, Lossy };

struct RuleApplication {
  std::string rule;
  std::vector<VertexId> vertices;
  Scalar side_factor;
  PhaseMerge merge = PhaseMerge::Exact;
};

// Each rule rewrites d in place and throws PatternError when the pattern does
// not match. Scalars are kept exact.

/// v is absorbed into u.
RuleApplication fuse(Diagram& d, VertexId u, VertexId v, PhaseMerge merge = PhaseMerge::Exact);
RuleApplication color_change(Diagram& d, VertexId v);
/// Pushes the degree-2 Pauli (or parametric pi) spider p through its
/// opposite-coloured neighbour v. A zero phase is allowed and only moves p.
RuleApplication pi_commute(Diagram& d, VertexId p, VertexId v, PhaseMerge merge = PhaseMerge::Exact);
/// Degree-2, phase-0 spider replaced by a wire.
RuleApplication identity_remove(Diagram& d, VertexId v);
/// Degree-2, phase-0 spider between two Hadamard edges replaced by a plain wire.
RuleApplication hadamard_cancel(Diagram& d, VertexId v);
/// Degree-1 Pauli spider copied through its opposite-coloured neighbour.
RuleApplication state_copy(Diagram& d, VertexId s, PhaseMerge merge = PhaseMerge::Exact);
/// z is a phase-0 Z spider, x a phase-0 X spider, joined by a plain edge.
RuleApplication bialgebra(Diagram& d, VertexId z, VertexId x);
/// Interior +-pi/2 Z spider in graph-like surroundings.
RuleApplication local_complement(Diagram& d, VertexId v);
/// Interior Hadamard-adjacent pair of Pauli Z spiders.
RuleApplication pivot(Diagram& d, VertexId u, VertexId v);
/// Legless concrete spider folded into the scalar.
RuleApplication remove_scalar_spider(Diagram& d, VertexId v);

bool can_fuse(const Diagram& d, VertexId u, VertexId v, PhaseMerge merge = PhaseMerge::Exact);
bool can_pi_commute(const Diagram& d, VertexId p, VertexId v, PhaseMerge merge = PhaseMerge::Exact);
bool can_identity_remove(const Diagram& d, VertexId v);
bool can_hadamard_cancel(const Diagram& d, VertexId v);
bool can_state_copy(const Diagram& d, VertexId s, PhaseMerge merge = PhaseMerge::Exact);
bool can_bialgebra(const Diagram& d, VertexId z, VertexId x);
bool can_local_complement(const Diagram& d, VertexId v);
bool can_pivot(const Diagram& d, VertexId u, VertexId v);
bool can_remove_scalar_spider(const Diagram& d, VertexId v);

/// Re-applies a recorded rule.
void replay(Diagram& d, const RuleApplication& app);

}  // namespace zxcut
