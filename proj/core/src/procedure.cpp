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

#include "zxcut/procedure.hpp"

#include <algorithm>

#include "zxcut/error.hpp"
#include "zxcut/heuristic.hpp"
#include "zxcut/simplify.hpp"

namespace zxcut {
namespace {

PartialOptions tracking(PhaseMerge merge, WeightTable& wt) {
  PartialOptions o;
  o.merge = merge;
  o.on_fuse = [&wt](VertexId s, VertexId a) { merge_on_fuse(wt, s, a); };
  return o;
}

/// One step of the parametric path: a rewrite, or a cut of `cut`.
struct Step {
  VertexId cut = -1;
  RuleApplication app;
};

/// Instantiates every branch of a recorded parametric path. Each branch
/// replays the same rewrites on concrete phases, so its structure, and hence
/// its T-count, matches the parametric graph.
class ExactRun {
 public:
  ExactRun(const std::vector<Step>& steps, const ProcedureOptions& opts, ProcedureReport& report)
      : steps_(steps), opts_(opts), r_(report) {}

  void node(Diagram d, std::size_t at) {
    for (; at < steps_.size(); ++at) {
      if (d.scalar().is_zero()) break;
      if (steps_[at].cut < 0) {
        replay(d, steps_[at].app);
        continue;
      }
      CutBranchPair b = cut_vertex(d, steps_[at].cut);
      d = Diagram();
      node(std::move(b.branch0), at + 1);
      node(std::move(b.branch1), at + 1);
      return;
    }
    leaf(d);
  }

 private:
  void leaf(const Diagram& d) {
    ++r_.leaves;
    DriverOptions o;
    o.budget = opts_.max_terms - r_.terms;
    TermSum ts = decompose_bss_driver(d, o);
    r_.terms += ts.count;
    *r_.value += ts.sum;
  }

  const std::vector<Step>& steps_;
  const ProcedureOptions& opts_;
  ProcedureReport& r_;
};

void record_steps(std::vector<RuleApplication>& log, std::vector<Step>* steps) {
  if (steps) {
    for (auto& a : log) steps->push_back({-1, std::move(a)});
  }
  log.clear();
}

}  // namespace

const char* to_string(ProcedureMode m) {
  switch (m) {
    case ProcedureMode::Exact: return "exact";
    case ProcedureMode::Blind: return "blind";
    case ProcedureMode::Parametric: return "parametric";
  }
  return "?";
}

void settle(ParamGraph& pg) {
  PartialOptions o;
  o.merge = PhaseMerge::Lossy;
  for (;;) {
    partial_simplify(pg.diagram, o);
    const std::size_t live = pg.num_live();
    const bool zero = pg.is_zero();
    pg = eliminate_params(std::move(pg));
    if (pg.num_live() == live && pg.is_zero() == zero) break;
  }
}

Count parametric_count(const ParamGraph& pg) {
  if (pg.is_zero()) return 1;
  return (Count(1) << pg.num_live()) * blind_estimate_bss(pg.diagram.t_count());
}

ProcedureReport run_procedure(const Diagram& d, ProcedureMode mode, const ProcedureOptions& opts) {
  ProcedureReport r;
  r.mode = mode;
  const bool exact = mode == ProcedureMode::Exact;
  if (exact && !d.is_concrete()) throw InputError("run_procedure: exact mode needs a concrete diagram");
  const bool eliminate = mode == ProcedureMode::Parametric;
  std::vector<Step> steps;
  std::vector<RuleApplication> log;
  std::vector<RuleApplication>* log_ptr = exact ? &log : nullptr;

  ParamGraph pg(d);
  if (eliminate) {
    settle(pg);
  } else {
    PartialOptions o;
    o.merge = PhaseMerge::Lossy;
    o.log = log_ptr;
    partial_simplify(pg.diagram, o);
    record_steps(log, &steps);
  }
  r.t_start = pg.diagram.t_count();
  WeightTable wt = compute_weights(pg.diagram);
  while (!pg.is_zero() && pg.diagram.t_count() > 2) {
    std::optional<CutChoice> c = select_cut(wt, pg.diagram);
    if (!c) break;
    if (r.cuts.size() >= opts.max_cuts) {
      r.complete = false;
      r.incomplete_reason = "cut limit reached";
      break;
    }
    const ParamId p = pg.next_param;
    r.cuts.push_back({c->vertex, c->tier, c->weight, static_cast<int>(r.cuts.size()), p});
    steps.push_back({c->vertex, {}});
    pg = param_cut(std::move(pg), c->vertex, p, PhaseMerge::Lossy);
    PartialOptions o = tracking(PhaseMerge::Lossy, wt);
    o.log = log_ptr;
    partial_simplify(pg.diagram, o);
    record_steps(log, &steps);
    if (eliminate) settle(pg);
    wt = reweigh(wt, pg.diagram);
  }
  r.cut_depth = r.cuts.size();
  r.residual_t = pg.diagram.t_count();
  if (exact) {
    for (auto& c : r.cuts) c.param.reset();
    r.value = 0.0;
    ExactRun run(steps, opts, r);
    try {
      run.node(d, 0);
    } catch (const BudgetError& e) {
      r.complete = false;
      r.incomplete_reason = e.what();
      r.value.reset();
    }
  } else if (eliminate) {
    r.leaves = 1;
    r.terms = parametric_count(pg);
    r.param_graph = std::move(pg);
  } else {
    r.leaves = 1;
    r.terms = (Count(1) << r.cuts.size()) * blind_estimate_bss(r.residual_t);
  }
  r.alpha = effective_alpha(r.terms, r.t_start);
  return r;
}

}  // namespace zxcut
