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

#include "zxcut/cutter.hpp"

#include <algorithm>

#include "zxcut/error.hpp"

namespace zxcut {
namespace {

void require_cuttable(const Diagram& d, VertexId v, const char* op) {
  if (!d.alive(v)) throw PatternError(std::string(op) + ": no vertex " + std::to_string(v));
  if (d.kind(v) == VertexKind::Boundary) throw PatternError(std::string(op) + ": cannot cut a boundary");
  if (d.kind(v) != VertexKind::Z) throw PatternError(std::string(op) + ": only Z-spiders can be cut");
}

/// Deletes v and terminates each former leg with an X-spider of the given phase.
void slice(Diagram& d, VertexId v, const ParamPhase& leg_phase) {
  std::vector<std::pair<VertexId, EdgeKind>> legs(d.neighbours(v).begin(), d.neighbours(v).end());
  d.remove_vertex(v);
  for (const auto& [w, k] : legs) {
    VertexId x = d.add_vertex(VertexKind::X, leg_phase);
    d.add_edge(x, w, k);
  }
  d.scalar().mul_sqrt2_pow(-static_cast<int>(legs.size()));
}

bool mentions(const Diagram& d, ParamId p) {
  for (VertexId v : d.vertices()) {
    const ParamPhase& ph = d.phase(v);
    if (ph.parity.contains(p) || ph.negate.contains(p)) return true;
  }
  for (const auto& f : d.scalar().factors()) {
    if (f.parity.contains(p)) return true;
  }
  return false;
}

bool has_opaque(const Diagram& d) {
  if (d.scalar().is_opaque()) return true;
  for (VertexId v : d.vertices()) {
    if (d.phase(v).opaque) return true;
  }
  return false;
}

void substitute_everywhere(ParamGraph& pg, ParamId p, const Parity& expr, bool constant) {
  Diagram& d = pg.diagram;
  for (VertexId v : d.vertices()) {
    const ParamPhase& ph = d.phase(v);
    if (!ph.parity.contains(p) && !ph.negate.contains(p)) continue;
    ParamPhase np = ph;
    np.substitute(p, expr, constant);
    d.set_phase(v, np);
  }
  d.scalar().substitute(p, expr, constant);
  for (auto& [q, s] : pg.substitutions) {
    if (s.expr.substitute(p, expr, constant)) s.constant = !s.constant;
  }
  pg.substitutions[p] = {expr, constant};
  pg.live_params.erase(p);
}

}  // namespace

CutBranchPair cut_vertex(const Diagram& d, VertexId v) {
  require_cuttable(d, v, "cut_vertex");
  if (!d.phase(v).is_concrete()) throw PatternError("cut_vertex: vertex is already parametric");
  const Phase alpha = d.phase(v).base;
  CutBranchPair out{d, d};
  slice(out.branch0, v, Phase::zero());
  slice(out.branch1, v, Phase::pi());
  out.branch1.scalar().add_phase(alpha);
  return out;
}

ParamGraph::ParamGraph(Diagram d) : diagram(std::move(d)) {
  live_params = diagram.params();
  for (const auto& f : diagram.scalar().factors()) live_params.insert(f.parity.ids().begin(), f.parity.ids().end());
  next_param = live_params.empty() ? 0 : *live_params.rbegin() + 1;
}

ParamGraph param_cut(ParamGraph pg, VertexId v, std::optional<ParamId> new_param, PhaseMerge merge) {
  Diagram& d = pg.diagram;
  require_cuttable(d, v, "param_cut");
  const ParamPhase alpha = d.phase(v);
  if (!alpha.is_concrete() && merge == PhaseMerge::Exact) {
    throw PatternError("param_cut: vertex is already parametric");
  }
  const ParamId p = new_param.value_or(pg.next_param);
  if (pg.live_params.count(p) || pg.substitutions.count(p) || mentions(d, p)) {
    throw PatternError("param_cut: parameter p" + std::to_string(p) + " is already in use");
  }
  slice(d, v, ParamPhase::param_pi(p));
  if (alpha.is_concrete()) {
    d.scalar().mul_param_phase(alpha.base, Parity(p));
  } else {
    d.scalar().mark_opaque();
  }
  pg.live_params.insert(p);
  pg.next_param = std::max(pg.next_param, p + 1);
  return pg;
}

std::vector<ParityConstraint> extract_constraints(const ParamGraph& pg) {
  std::vector<ParityConstraint> out;
  const Diagram& d = pg.diagram;
  for (VertexId v : d.vertices()) {
    if (!d.is_spider(v) || d.degree(v) != 0) continue;
    const ParamPhase& ph = d.phase(v);
    if (!ph.is_pauli_valued() || ph.parity.empty()) continue;
    out.push_back({ph.parity, ph.base == Phase::pi()});
  }
  return out;
}

ParamGraph eliminate_params(ParamGraph pg) {
  if (pg.is_zero()) return pg;
  struct Row {
    ParamId pivot;
    Parity params;
    bool parity;
  };
  std::vector<Row> rows;
  for (auto& c : extract_constraints(pg)) {
    for (const Row& r : rows) {
      if (c.params.contains(r.pivot)) {
        c.params ^= r.params;
        c.parity ^= r.parity;
      }
    }
    if (c.params.empty()) {
      if (c.parity) {
        pg.diagram.scalar().set_zero();
        return pg;
      }
      continue;
    }
    const ParamId p = c.params.ids().front();
    for (Row& r : rows) {
      if (r.params.contains(p)) {
        r.params ^= c.params;
        r.parity ^= c.parity;
      }
    }
    rows.push_back({p, c.params, c.parity});
  }
  for (Row& r : rows) {
    Parity expr = r.params;
    expr.toggle(r.pivot);
    substitute_everywhere(pg, r.pivot, expr, r.parity);
  }
  Diagram& d = pg.diagram;
  for (VertexId v : d.vertices()) {
    if (d.alive(v) && can_remove_scalar_spider(d, v)) remove_scalar_spider(d, v);
  }
  if (!has_opaque(d)) {
    for (auto it = pg.live_params.begin(); it != pg.live_params.end();) {
      if (mentions(d, *it)) {
        ++it;
      } else {
        d.scalar().mul_sqrt2_pow(2);
        it = pg.live_params.erase(it);
      }
    }
  }
  return pg;
}

Diagram assign(const ParamGraph& pg, const Assignment& a) {
  Diagram d = pg.diagram;
  for (VertexId v : d.vertices()) {
    if (!d.phase(v).is_concrete()) d.set_phase(v, d.phase(v).evaluate(a));
  }
  d.scalar() = d.scalar().evaluated(a);
  return d;
}

void for_each_term(const ParamGraph& pg, const std::function<void(Diagram&&)>& f, std::size_t max_live) {
  const std::vector<ParamId> live(pg.live_params.begin(), pg.live_params.end());
  const std::size_t n = live.size();
  if (n > max_live) {
    throw LimitError("expand: " + std::to_string(n) + " live parameters exceed the cap of " +
                     std::to_string(max_live));
  }
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Assignment a;
    for (std::size_t i = 0; i < n; ++i) a[live[i]] = (mask >> (n - 1 - i)) & 1U;
    f(assign(pg, a));
  }
}

std::vector<Diagram> expand(const ParamGraph& pg, std::size_t max_live) {
  std::vector<Diagram> out;
  for_each_term(pg, [&](Diagram&& d) { out.push_back(std::move(d)); }, max_live);
  return out;
}

}  // namespace zxcut
