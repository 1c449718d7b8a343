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

#include "zxcut/heuristic.hpp"

#include <algorithm>

namespace zxcut {
namespace {

bool is_connector(const Diagram& d, VertexId x) {
  if (d.kind(x) != VertexKind::X || d.degree(x) < 3 || !d.phase(x).is_pauli_valued()) return false;
  for (const auto& [c, k] : d.neighbours(x)) {
    if (k != EdgeKind::Plain || d.kind(c) != VertexKind::Z) return false;
  }
  return true;
}

bool positively_weighted(const WeightTable& wt, const Diagram& d, VertexId v) {
  return d.kind(v) == VertexKind::Z && wt.max_weight(v) > 0.0;
}

using Contributions = std::map<std::pair<VertexId, VertexId>, double>;

void push_contributions(WeightTable& wt, const Contributions& contrib) {
  std::map<VertexId, double> entries;
  std::map<VertexId, std::set<VertexId>> children;
  for (const auto& [key, w] : contrib) {
    entries[key.first] += w;
    children[key.first].insert(key.second);
  }
  wt.push_tier(std::move(entries), children);
}

}  // namespace

bool is_t_endpoint(const Diagram& d, VertexId v) {
  return d.alive(v) && d.kind(v) == VertexKind::Z && d.phase(v).is_t_like();
}

std::vector<BlockedPair> find_blocked_pairs(const Diagram& d, const EndpointFilter& filter) {
  std::vector<BlockedPair> out;
  for (VertexId x : d.vertices()) {
    if (!is_connector(d, x)) continue;
    std::vector<VertexId> ends;
    for (const auto& [c, k] : d.neighbours(x)) {
      if (filter(d, c)) ends.push_back(c);
    }
    for (std::size_t i = 0; i < ends.size(); ++i) {
      for (std::size_t j = i + 1; j < ends.size(); ++j) {
        BlockedPair bp;
        bp.u = ends[i];
        bp.w = ends[j];
        for (const auto& [c, k] : d.neighbours(x)) {
          if (c != bp.u && c != bp.w) bp.blockers.push_back({x, c});
        }
        bp.k = static_cast<int>(bp.blockers.size());
        out.push_back(std::move(bp));
      }
    }
  }
  return out;
}

double gamma(double w) { return std::clamp(w / 2.0, 0.0, 1.0); }

double WeightTable::weight(VertexId v, int tier) const {
  if (tier < 0 || static_cast<std::size_t>(tier) >= tiers_.size()) return 0.0;
  auto it = tiers_[tier].find(v);
  return it == tiers_[tier].end() ? 0.0 : it->second;
}

double WeightTable::max_weight(VertexId v) const {
  auto it = summary_.find(v);
  return it == summary_.end() ? 0.0 : it->second.max_weight;
}

std::optional<int> WeightTable::max_tier(VertexId v) const {
  auto it = summary_.find(v);
  if (it == summary_.end() || it->second.max_tier < 0) return std::nullopt;
  return it->second.max_tier;
}

const std::set<VertexId>& WeightTable::children(VertexId v) const {
  static const std::set<VertexId> none;
  auto it = summary_.find(v);
  return it == summary_.end() ? none : it->second.children;
}

double WeightTable::total_weight() const {
  double s = 0.0;
  for (const auto& [v, sm] : summary_) s += sm.max_weight;
  return s;
}

void WeightTable::push_tier(std::map<VertexId, double> entries,
                            const std::map<VertexId, std::set<VertexId>>& children) {
  const int t = static_cast<int>(tiers_.size());
  for (const auto& [v, w] : entries) {
    WeightSummary& s = summary_[v];
    s.max_weight = std::max(s.max_weight, w);
    s.max_tier = t;
    if (auto it = children.find(v); it != children.end()) s.children.insert(it->second.begin(), it->second.end());
  }
  tiers_.push_back(std::move(entries));
}

WeightTable assign_tier0(const Diagram& d) {
  WeightTable wt;
  Contributions contrib;
  for (const BlockedPair& bp : find_blocked_pairs(d, is_t_endpoint)) {
    const double share = 1.0 / bp.k;
    for (const Blocker& b : bp.blockers) {
      for (VertexId e : {bp.u, bp.w}) {
        double& c = contrib[{b.opposite_end, e}];
        c = std::max(c, share);
      }
    }
  }
  if (!contrib.empty()) push_contributions(wt, contrib);
  return wt;
}

bool propagate(const Diagram& d, WeightTable& wt, int t) {
  if (t < 1 || static_cast<std::size_t>(t) != wt.num_tiers()) return false;
  const auto& prev = wt.tier(t - 1);
  auto weighted = [&](const Diagram& g, VertexId v) { return positively_weighted(wt, g, v); };
  Contributions contrib;
  for (const BlockedPair& bp : find_blocked_pairs(d, weighted)) {
    for (VertexId v : {bp.u, bp.w}) {
      auto it = prev.find(v);
      if (it == prev.end()) continue;
      const double share = gamma(it->second) / bp.k;
      for (const Blocker& b : bp.blockers) {
        // Weight never flows back to a vertex that fed v.
        if (wt.children(v).count(b.opposite_end)) continue;
        double& c = contrib[{b.opposite_end, v}];
        c = std::max(c, share);
      }
    }
  }
  if (contrib.empty()) return false;
  std::map<VertexId, double> entries;
  for (const auto& [key, w] : contrib) entries[key.first] += w;
  for (std::size_t i = 0; i < wt.num_tiers(); ++i) {
    if (wt.tier(i) == entries) return false;
  }
  push_contributions(wt, contrib);
  return true;
}

WeightTable compute_weights(const Diagram& d, int max_tiers) {
  WeightTable wt = assign_tier0(d);
  for (int t = 1; t < max_tiers && wt.num_tiers() == static_cast<std::size_t>(t); ++t) {
    if (!propagate(d, wt, t)) break;
  }
  return wt;
}

std::optional<CutChoice> select_cut(const WeightTable& wt, const Diagram& d) {
  int top = -1;
  for (const auto& [v, s] : wt.summaries()) {
    if (d.alive(v) && d.kind(v) == VertexKind::Z && s.max_weight > 0.0) top = std::max(top, s.max_tier);
  }
  for (int tier = top; tier >= 0; --tier) {
    std::optional<CutChoice> best;
    for (const auto& [v, s] : wt.summaries()) {
      if (!d.alive(v) || d.kind(v) != VertexKind::Z || s.max_weight <= 0.0 || s.max_tier != tier) continue;
      const double boosted = s.max_weight + (d.phase(v).is_t_like() ? 1.0 : 0.0);
      if (!best || boosted > best->weight) best = CutChoice{v, tier, boosted};
    }
    if (best && best->weight >= 2.0) return best;
  }
  return std::nullopt;
}

void merge_on_fuse(WeightTable& wt, VertexId survivor, VertexId absorbed) {
  for (auto& tier : wt.tiers_) {
    if (auto it = tier.find(absorbed); it != tier.end()) {
      tier[survivor] += it->second;
      tier.erase(absorbed);
    }
  }
  if (auto it = wt.summary_.find(absorbed); it != wt.summary_.end()) {
    WeightSummary a = std::move(it->second);
    wt.summary_.erase(it);
    WeightSummary& s = wt.summary_[survivor];
    s.max_weight += a.max_weight;
    s.max_tier = std::max(s.max_tier, a.max_tier);
    s.children.insert(a.children.begin(), a.children.end());
  }
  for (auto& [v, s] : wt.summary_) {
    if (s.children.erase(absorbed)) s.children.insert(survivor);
  }
}

WeightTable reweigh(const WeightTable& old, const Diagram& d) {
  static const std::set<VertexId> none;
  WeightTable fresh = compute_weights(d);
  WeightTable out;
  out.tiers_ = fresh.tiers_;
  std::set<VertexId> keys;
  for (const auto& [v, s] : old.summary_) keys.insert(v);
  for (const auto& [v, s] : fresh.summary_) keys.insert(v);
  for (VertexId v : keys) {
    if (!d.alive(v)) continue;
    auto o = old.summary_.find(v);
    auto f = fresh.summary_.find(v);
    const std::set<VertexId>& fresh_children = f == fresh.summary_.end() ? none : f->second.children;
    if (o != old.summary_.end() && o->second.children == fresh_children) {
      out.summary_[v] = o->second;
    } else if (f != fresh.summary_.end()) {
      out.summary_[v] = f->second;
    }
  }
  return out;
}

}  // namespace zxcut
