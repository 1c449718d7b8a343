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
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "zxcut/diagram.hpp"

namespace zxcut {

struct Blocker {
  /// The X-spider joining the pair.
  VertexId connector;
  /// The Z-spider whose cut unblocks the pair.
  VertexId opposite_end;
  friend bool operator==(const Blocker&, const Blocker&) = default;
};

/// Two Z-spiders joined through a Pauli X-spider whose remaining legs go to
/// the blockers. Cutting every blocker lets u and w fuse.
struct BlockedPair {
  VertexId u = -1;
  VertexId w = -1;
  std::vector<Blocker> blockers;
  int k = 0;
  friend bool operator==(const BlockedPair&, const BlockedPair&) = default;
};

using EndpointFilter = std::function<bool(const Diagram&, VertexId)>;

/// Interior Z-spider with a T-like phase.
bool is_t_endpoint(const Diagram& d, VertexId v);

/// Pairs ordered by connector id, then by (u, w).
std::vector<BlockedPair> find_blocked_pairs(const Diagram& d, const EndpointFilter& filter);

/// min(w/2, 1).
double gamma(double w);

struct WeightSummary {
  double max_weight = 0.0;
  /// Highest tier with positive weight, -1 if none.
  int max_tier = -1;
  /// Endpoints that contributed to this vertex's weight.
  std::set<VertexId> children;
  friend bool operator==(const WeightSummary&, const WeightSummary&) = default;
};

class WeightTable {
 public:
  double weight(VertexId v, int tier) const;
  std::size_t num_tiers() const { return tiers_.size(); }
  const std::map<VertexId, double>& tier(std::size_t t) const { return tiers_.at(t); }

  /// W_v; zero when unweighted.
  double max_weight(VertexId v) const;
  /// T_v; nullopt when unweighted.
  std::optional<int> max_tier(VertexId v) const;
  const std::set<VertexId>& children(VertexId v) const;
  const std::map<VertexId, WeightSummary>& summaries() const { return summary_; }
  double total_weight() const;

  /// Appends tier t = num_tiers(); entries must be positive.
  void push_tier(std::map<VertexId, double> entries, const std::map<VertexId, std::set<VertexId>>& children);

  friend void merge_on_fuse(WeightTable& wt, VertexId survivor, VertexId absorbed);
  friend WeightTable reweigh(const WeightTable& old, const Diagram& d);
  friend bool operator==(const WeightTable&, const WeightTable&) = default;

 private:
  std::vector<std::map<VertexId, double>> tiers_;
  std::map<VertexId, WeightSummary> summary_;
};

/// Tier-0 weights from blocked pairs of T-like spiders.
WeightTable assign_tier0(const Diagram& d);

/// Adds tier t (which must equal wt.num_tiers()). The tier is left out when it
/// would be empty or repeat an earlier tier; returns whether it was added.
bool propagate(const Diagram& d, WeightTable& wt, int t);

/// assign_tier0 then propagate until nothing changes or max_tiers is reached.
WeightTable compute_weights(const Diagram& d, int max_tiers = 32);

struct CutChoice {
  VertexId vertex = -1;
  int tier = 0;
  /// W_v including the T-like boost.
  double weight = 0.0;
  friend bool operator==(const CutChoice&, const CutChoice&) = default;
};

std::optional<CutChoice> select_cut(const WeightTable& wt, const Diagram& d);

/// Folds absorbed's summary into survivor's.
void merge_on_fuse(WeightTable& wt, VertexId survivor, VertexId absorbed);

/// Recomputes weights on d and adopts the fresh values for every vertex
/// whose children changed or that is new; others keep their merged values.
WeightTable reweigh(const WeightTable& old, const Diagram& d);

}  // namespace zxcut
