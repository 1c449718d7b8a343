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

#include <algorithm>
#include <complex>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "support.hpp"
#include "zxcut/oracle.hpp"
#include "zxcut/rewrite.hpp"
#include "zxcut/simplify.hpp"

namespace zxcut::testing::rules {

using Apply = std::function<bool(Diagram&, std::mt19937_64&)>;

/// Diagrams in the shapes rules are applied to: raw circuits, partially
/// simplified ones and graph-like ones.
inline Diagram source(std::mt19937_64& rng, int round) {
  const int gates = 8 + static_cast<int>(rng() % 12);
  Diagram d = round % 2 ? random_plus_diagram(rng, 3, gates, round % 3 != 0)
                        : random_scalar_diagram(rng, 3, gates, round % 3 != 0);
  switch (round % 4) {
    case 1: partial_simplify(d); break;
    case 2: to_graph_like(d); break;
    default: break;
  }
  return d;
}

inline std::vector<VertexId> shuffled(const Diagram& d, std::mt19937_64& rng) {
  std::vector<VertexId> vs = d.vertices();
  std::shuffle(vs.begin(), vs.end(), rng);
  return vs;
}

/// A random plain-or-Hadamard edge between two spiders, if any.
inline std::optional<Edge> spider_edge(const Diagram& d, std::mt19937_64& rng) {
  std::vector<Edge> es;
  for (const Edge& e : d.edges()) {
    if (d.is_spider(e.u) && d.is_spider(e.v)) es.push_back(e);
  }
  if (es.empty()) return std::nullopt;
  return es[rng() % es.size()];
}

inline bool try_fuse(Diagram& d, std::mt19937_64& rng) {
  for (VertexId v : shuffled(d, rng)) {
    for (const auto& [w, k] : d.neighbours(v)) {
      if (can_fuse(d, v, w)) {
        fuse(d, v, w);
        return true;
      }
    }
  }
  return false;
}

inline bool try_color_change(Diagram& d, std::mt19937_64& rng) {
  for (VertexId v : shuffled(d, rng)) {
    if (d.is_spider(v)) {
      color_change(d, v);
      return true;
    }
  }
  return false;
}

// Splits an edge v-w into v - P(pi) - P(pi) - w (P opposite to v) and
// pushes the first pi through v.
inline bool try_pi_commute(Diagram& d, std::mt19937_64& rng) {
  auto e = spider_edge(d, rng);
  if (!e) return false;
  auto [v, w, k] = *e;
  if (rng() & 1U) std::swap(v, w);
  const VertexKind pk = opposite(d.kind(v));
  d.remove_edge(v, w);
  VertexId p = d.add_vertex(pk, Phase::pi());
  VertexId q = d.add_vertex(pk, Phase::pi());
  d.add_edge(v, p, EdgeKind::Plain);
  d.add_edge(p, q, EdgeKind::Plain);
  d.add_edge(q, w, k);
  pi_commute(d, p, v);
  return true;
}

inline bool try_identity_remove(Diagram& d, std::mt19937_64& rng) {
  auto e = spider_edge(d, rng);
  if (!e) return false;
  d.remove_edge(e->u, e->v);
  VertexId m = d.add_vertex((rng() & 1U) ? VertexKind::Z : VertexKind::X, Phase(0));
  d.add_edge(e->u, m, e->kind);
  d.add_edge(m, e->v, EdgeKind::Plain);
  identity_remove(d, m);
  return true;
}

inline bool try_hadamard_cancel(Diagram& d, std::mt19937_64& rng) {
  auto e = spider_edge(d, rng);
  if (!e || e->kind != EdgeKind::Plain) return false;
  d.remove_edge(e->u, e->v);
  VertexId m = d.add_vertex((rng() & 1U) ? VertexKind::Z : VertexKind::X, Phase(0));
  d.add_edge(e->u, m, EdgeKind::Hadamard);
  d.add_edge(m, e->v, EdgeKind::Hadamard);
  hadamard_cancel(d, m);
  return true;
}

inline bool try_state_copy(Diagram& d, std::mt19937_64& rng) {
  for (VertexId v : shuffled(d, rng)) {
    if (can_state_copy(d, v)) {
      state_copy(d, v);
      return true;
    }
  }
  return false;
}

inline bool try_bialgebra(Diagram& d, std::mt19937_64& rng) {
  for (VertexId v : shuffled(d, rng)) {
    for (const auto& [w, k] : d.neighbours(v)) {
      if (can_bialgebra(d, v, w)) {
        bialgebra(d, v, w);
        return true;
      }
    }
  }
  return false;
}

inline bool try_local_complement(Diagram& d, std::mt19937_64& rng) {
  to_graph_like(d);
  for (VertexId v : shuffled(d, rng)) {
    if (can_local_complement(d, v)) {
      local_complement(d, v);
      return true;
    }
  }
  return false;
}

inline bool try_pivot(Diagram& d, std::mt19937_64& rng) {
  to_graph_like(d);
  for (VertexId v : shuffled(d, rng)) {
    for (const auto& [w, k] : d.neighbours(v)) {
      if (can_pivot(d, v, w)) {
        pivot(d, v, w);
        return true;
      }
    }
  }
  return false;
}

inline bool try_remove_scalar_spider(Diagram& d, std::mt19937_64& rng) {
  // A legless spider is worth 1 + e^(ia); divide that back out so the
  // insertion itself keeps the value. a = pi would be zero.
  static constexpr int kPhases[] = {0, 1, 2, 3, 5, 6, 7};
  const Phase a(kPhases[rng() % 7]);
  VertexId v = d.add_vertex((rng() & 1U) ? VertexKind::Z : VertexKind::X, a);
  d.scalar().mul_complex(1.0 / (1.0 + std::polar(1.0, a.radians())));
  remove_scalar_spider(d, v);
  return true;
}

struct NamedRule {
  const char* name;
  bool (*apply)(Diagram&, std::mt19937_64&);
};

inline std::vector<NamedRule> all() {
  return {{"fuse", try_fuse}, {"color_change", try_color_change}, {"pi_commute", try_pi_commute}, {"identity_remove", try_identity_remove}, {"hadamard_cancel", try_hadamard_cancel}, {"state_copy", try_state_copy}, {"bialgebra", try_bialgebra}, {"local_complement", try_local_complement}, {"pivot", try_pivot}, {"remove_scalar_spider", try_remove_scalar_spider}};
}

/// Applies `rule` to fresh random diagrams until `matches` matches were checked
/// against the oracle. Returns an empty string on success.
inline std::string check(const char* name, const Apply& rule, int matches = 50, double tol = 1e-9) {
  std::mt19937_64 rng(std::hash<std::string>{}(name));
  int found = 0;
  for (int round = 0; found < matches; ++round) {
    if (round >= 5000) return std::string(name) + ": too few matches";
    Diagram d = source(rng, round);
    const std::complex<double> before = evaluate_scalar(d);
    Diagram e = d;
    if (!rule(e, rng)) continue;
    ++found;
    e.validate();
    if (!close(evaluate_scalar(e), before, tol)) return std::string(name) + ": value changed in round " + std::to_string(round);
  }
  return {};
}

}  // namespace zxcut::testing::rules
