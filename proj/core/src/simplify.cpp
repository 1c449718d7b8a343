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

#include "zxcut/simplify.hpp"

#include "zxcut/error.hpp"

namespace zxcut {
namespace {

void note(std::vector<RuleApplication>* log, RuleApplication&& app) {
  if (log) log->push_back(std::move(app));
}

bool is_live_spider(const Diagram& d, VertexId v) { return d.alive(v) && d.is_spider(v); }

std::size_t remove_identities(Diagram& d, std::vector<RuleApplication>* log) {
  std::size_t n = 0;
  for (VertexId v : d.vertices()) {
    if (d.alive(v) && can_identity_remove(d, v)) {
      note(log, identity_remove(d, v));
      ++n;
    }
  }
  return n;
}

std::size_t remove_scalar_spiders(Diagram& d, std::vector<RuleApplication>* log) {
  std::size_t n = 0;
  for (VertexId v : d.vertices()) {
    if (d.alive(v) && can_remove_scalar_spider(d, v)) {
      note(log, remove_scalar_spider(d, v));
      ++n;
    }
  }
  return n;
}

/// A degree-1 concrete Pauli Z spider hanging off an interior Z spider by a
/// Hadamard edge is an X basis state; copy it.
bool copy_candidate(const Diagram& d, VertexId v) {
  if (!is_live_spider(d, v) || d.kind(v) != VertexKind::Z || d.degree(v) != 1) return false;
  const ParamPhase& p = d.phase(v);
  if (!p.is_concrete() || !p.base.is_pauli()) return false;
  auto [w, k] = *d.neighbours(v).begin();
  return k == EdgeKind::Hadamard && d.is_spider(w) && d.kind(w) == VertexKind::Z &&
         d.phase(w).is_concrete();
}

bool fusable_after_color_change(const Diagram& d, VertexId s, VertexId w, PhaseMerge merge) {
  return merge == PhaseMerge::Lossy || add_exact(d.phase(s), d.phase(w)).has_value();
}

/// Degree <= 2 spiders whose Hadamard edge can be moved out of the way so that
/// they fuse into a neighbour or become plain-attached states.
bool absorb_candidate(const Diagram& d, VertexId v, PhaseMerge merge) {
  if (!is_live_spider(d, v)) return false;
  if (d.degree(v) == 1) {
    auto [w, k] = *d.neighbours(v).begin();
    return k == EdgeKind::Hadamard && d.is_spider(w);
  }
  if (d.degree(v) != 2) return false;
  const ParamPhase& p = d.phase(v);
  if (!p.is_pauli_valued() || p.is_zero()) return false;
  auto it = d.neighbours(v).begin();
  auto [a, ka] = *it++;
  auto [b, kb] = *it;
  if (ka == kb) return false;
  VertexId h = ka == EdgeKind::Hadamard ? a : b;
  return d.is_spider(h) && d.kind(h) != d.kind(v) && fusable_after_color_change(d, v, h, merge);
}

/// Through which neighbour to push a pi spider, or -1.
VertexId pi_target(const Diagram& d, VertexId p, PhaseMerge merge) {
  if (!is_live_spider(d, p) || d.degree(p) != 2) return -1;
  const ParamPhase& pp = d.phase(p);
  if (!pp.is_pauli_valued() || pp.is_zero()) return -1;
  for (const auto& [w, k] : d.neighbours(p)) {
    if (k != EdgeKind::Plain || !d.is_spider(w) || d.kind(w) == d.kind(p)) return -1;
  }
  // Prefer pushes that keep every phase exact and fusable.
  for (const auto& [w, k] : d.neighbours(p)) {
    const ParamPhase& pw = d.phase(w);
    bool clean = pp.is_concrete() || (pw.is_concrete() && pw.base.is_clifford());
    if (clean && can_pi_commute(d, p, w, PhaseMerge::Exact)) return w;
  }
  if (merge == PhaseMerge::Lossy) {
    for (const auto& [w, k] : d.neighbours(p)) {
      if (can_pi_commute(d, p, w, merge)) return w;
    }
  }
  return -1;
}

}  // namespace

std::size_t spider_simp(Diagram& d, const PartialOptions& opts) {
  std::size_t n = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v : d.vertices()) {
      while (is_live_spider(d, v)) {
        VertexId target = -1;
        for (const auto& [w, k] : d.neighbours(v)) {
          if (k == EdgeKind::Plain && can_fuse(d, v, w, opts.merge)) {
            target = w;
            break;
          }
        }
        if (target < 0) break;
        VertexId survivor = std::min(v, target);
        VertexId absorbed = std::max(v, target);
        note(opts.log, fuse(d, survivor, absorbed, opts.merge));
        if (opts.on_fuse) opts.on_fuse(survivor, absorbed);
        ++n;
        changed = true;
      }
    }
  }
  return n;
}

void to_graph_like(Diagram& d, std::vector<RuleApplication>* log) {
  bool changed = true;
  while (changed) {
    for (VertexId v : d.vertices()) {
      if (d.kind(v) == VertexKind::X) note(log, color_change(d, v));
    }
    PartialOptions opts;
    opts.log = log;
    changed = spider_simp(d, opts) > 0;
    changed |= remove_identities(d, log) > 0;
  }
}

void full_simplify(Diagram& d, std::vector<RuleApplication>* log) {
  for (;;) {
    to_graph_like(d, log);
    bool changed = remove_scalar_spiders(d, log) > 0;
    for (VertexId v : d.vertices()) {
      if (copy_candidate(d, v)) {
        note(log, color_change(d, v));
        note(log, state_copy(d, v));
        changed = true;
      }
    }
    if (changed) continue;
    for (VertexId v : d.vertices()) {
      if (d.alive(v) && can_local_complement(d, v)) {
        note(log, local_complement(d, v));
        changed = true;
      }
    }
    for (VertexId v : d.vertices()) {
      if (!is_live_spider(d, v)) continue;
      for (const auto& [w, k] : d.neighbours(v)) {
        if (w > v && can_pivot(d, v, w)) {
          note(log, pivot(d, v, w));
          changed = true;
          break;
        }
      }
    }
    if (!changed) break;
  }
}

void partial_simplify(Diagram& d, const PartialOptions& opts) {
  for (;;) {
    bool changed = spider_simp(d, opts) > 0;
    for (VertexId v : d.vertices()) {
      if (absorb_candidate(d, v, opts.merge)) {
        note(opts.log, color_change(d, v));
        changed = true;
      }
    }
    if (changed) continue;
    changed |= remove_identities(d, opts.log) > 0;
    for (VertexId v : d.vertices()) {
      VertexId w = pi_target(d, v, opts.merge);
      if (w >= 0) {
        note(opts.log, pi_commute(d, v, w, opts.merge));
        changed = true;
      }
    }
    if (opts.state_copy) {
      for (VertexId v : d.vertices()) {
        if (d.alive(v) && can_state_copy(d, v, opts.merge)) {
          note(opts.log, state_copy(d, v, opts.merge));
          changed = true;
        }
      }
    }
    changed |= remove_scalar_spiders(d, opts.log) > 0;
    if (!changed) break;
  }
}

Scalar reduce_scalar_clifford(Diagram d) {
  if (!d.is_scalar_diagram()) throw PatternError("reduce_scalar_clifford: diagram has open boundaries");
  if (!d.is_concrete()) throw PatternError("reduce_scalar_clifford: parametric diagram");
  if (d.t_count() != 0) throw PatternError("reduce_scalar_clifford: T-like phase present");
  full_simplify(d);
  if (d.num_vertices() != 0) {
    throw std::logic_error("reduce_scalar_clifford: " + std::to_string(d.num_vertices()) +
                           " vertices survived Clifford reduction");
  }
  return d.scalar();
}

}  // namespace zxcut
