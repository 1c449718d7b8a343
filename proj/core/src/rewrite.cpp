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

#include "zxcut/rewrite.hpp"

#include <algorithm>
#include <utility>

#include "zxcut/error.hpp"

namespace zxcut {
namespace {

[[noreturn]] void mismatch(const std::string& rule, const std::string& why) {
  throw PatternError(rule + ": " + why);
}

bool is_spider_alive(const Diagram& d, VertexId v) { return d.alive(v) && d.is_spider(v); }

/// A Pauli-valued phase as pi * (c XOR cond).
struct PauliSplit {
  bool c;
  Parity cond;
};

PauliSplit split_pauli(const ParamPhase& p) { return {p.base == Phase::pi(), p.parity}; }

/// Multiplies f by e^(i * alpha * [c XOR cond]); false when that is not
/// representable under the merge policy.
bool conditional_phase(Scalar& f, const ParamPhase& alpha, const PauliSplit& s, PhaseMerge merge) {
  if (s.cond.empty() && !s.c) return true;
  if (alpha.opaque || (!alpha.is_concrete() && !s.cond.empty())) {
    if (merge == PhaseMerge::Exact) return false;
    f.mark_opaque();
    return true;
  }
  if (s.cond.empty()) {
    // e^(i((-1)^N b + pi[P])) = e^(ib) e^(-2ib[N]) e^(i pi [P])
    f.add_phase(alpha.base);
    f.mul_param_phase(-(alpha.base + alpha.base), alpha.negate);
    f.mul_param_phase(Phase::pi(), alpha.parity);
    return true;
  }
  if (s.c) {
    f.add_phase(alpha.base);
    f.mul_param_phase(-alpha.base, s.cond);
  } else {
    f.mul_param_phase(alpha.base, s.cond);
  }
  return true;
}

bool graph_like_around(const Diagram& d, VertexId v, VertexId skip = -1) {
  for (const auto& [w, k] : d.neighbours(v)) {
    if (w == skip) continue;
    if (d.kind(w) != VertexKind::Z || k != EdgeKind::Hadamard) return false;
  }
  return true;
}

RuleApplication record(std::string rule, std::vector<VertexId> vs, Scalar f, PhaseMerge merge) {
  return RuleApplication{std::move(rule), std::move(vs), std::move(f), merge};
}

}  // namespace

bool can_fuse(const Diagram& d, VertexId u, VertexId v, PhaseMerge merge) {
  if (u == v || !is_spider_alive(d, u) || !is_spider_alive(d, v)) return false;
  if (d.kind(u) != d.kind(v)) return false;
  auto e = d.edge(u, v);
  if (!e || *e != EdgeKind::Plain) return false;
  return merge == PhaseMerge::Lossy || add_exact(d.phase(u), d.phase(v)).has_value();
}

RuleApplication fuse(Diagram& d, VertexId u, VertexId v, PhaseMerge merge) {
  if (!can_fuse(d, u, v, merge)) mismatch("fuse", "spiders are not fusable");
  ParamPhase sum = merge == PhaseMerge::Exact ? *add_exact(d.phase(u), d.phase(v))
                                              : add_lossy(d.phase(u), d.phase(v));
  std::vector<std::pair<VertexId, EdgeKind>> legs;
  for (const auto& [w, k] : d.neighbours(v)) {
    if (w != u) legs.emplace_back(w, k);
  }
  d.remove_vertex(v);
  d.set_phase(u, sum);
  Scalar f;
  for (const auto& [w, k] : legs) f *= d.add_edge_smart(u, w, k);
  return record("fuse", {u, v}, f, merge);
}

RuleApplication color_change(Diagram& d, VertexId v) {
  if (!is_spider_alive(d, v)) mismatch("color_change", "not a spider");
  d.set_kind(v, opposite(d.kind(v)));
  std::vector<std::pair<VertexId, EdgeKind>> legs(d.neighbours(v).begin(), d.neighbours(v).end());
  for (const auto& [w, k] : legs) d.set_edge_kind(v, w, toggled(k));
  return record("color_change", {v}, Scalar{}, PhaseMerge::Exact);
}

bool can_pi_commute(const Diagram& d, VertexId p, VertexId v, PhaseMerge merge) {
  if (!is_spider_alive(d, p) || !is_spider_alive(d, v)) return false;
  if (d.kind(p) == d.kind(v) || d.degree(p) != 2) return false;
  const ParamPhase& pp = d.phase(p);
  if (!pp.is_pauli_valued()) return false;
  auto e = d.edge(p, v);
  if (!e || *e != EdgeKind::Plain) return false;
  Scalar probe;
  return conditional_phase(probe, d.phase(v), split_pauli(pp), merge);
}

RuleApplication pi_commute(Diagram& d, VertexId p, VertexId v, PhaseMerge merge) {
  if (!can_pi_commute(d, p, v, merge)) mismatch("pi_commute", "pattern not matched");
  const ParamPhase pp = d.phase(p);
  const PauliSplit s = split_pauli(pp);
  Scalar f;
  conditional_phase(f, d.phase(v), s, merge);

  VertexId q = -1;
  EdgeKind kq = EdgeKind::Plain;
  for (const auto& [w, k] : d.neighbours(p)) {
    if (w != v) {
      q = w;
      kq = k;
    }
  }
  std::vector<std::pair<VertexId, EdgeKind>> far;
  for (const auto& [w, k] : d.neighbours(v)) {
    if (w != p) far.emplace_back(w, k);
  }
  d.remove_vertex(p);
  ParamPhase pv = d.phase(v);
  pv.negate_by(s.cond, s.c);
  d.set_phase(v, pv);
  for (const auto& [w, k] : far) {
    d.remove_edge(v, w);
    VertexId c = d.add_vertex(d.kind(v) == VertexKind::Z ? VertexKind::X : VertexKind::Z, pp);
    d.add_edge(v, c, EdgeKind::Plain);
    d.add_edge(c, w, k);
  }
  d.add_edge(v, q, kq);
  d.scalar() *= f;
  return record("pi_commute", {p, v}, f, merge);
}

bool can_identity_remove(const Diagram& d, VertexId v) {
  return is_spider_alive(d, v) && d.degree(v) == 2 && d.phase(v).is_zero();
}

RuleApplication identity_remove(Diagram& d, VertexId v) {
  if (!can_identity_remove(d, v)) mismatch("identity_remove", "not a phase-0 degree-2 spider");
  auto it = d.neighbours(v).begin();
  auto [a, ka] = *it++;
  auto [b, kb] = *it;
  d.remove_vertex(v);
  Scalar f = d.add_edge_smart(a, b, compose(ka, kb));
  return record("identity_remove", {v}, f, PhaseMerge::Exact);
}

bool can_hadamard_cancel(const Diagram& d, VertexId v) {
  if (!can_identity_remove(d, v)) return false;
  for (const auto& [w, k] : d.neighbours(v)) {
    if (k != EdgeKind::Hadamard) return false;
  }
  return true;
}

RuleApplication hadamard_cancel(Diagram& d, VertexId v) {
  if (!can_hadamard_cancel(d, v)) mismatch("hadamard_cancel", "not an identity between two Hadamard edges");
  RuleApplication app = identity_remove(d, v);
  app.rule = "hadamard_cancel";
  return app;
}

bool can_state_copy(const Diagram& d, VertexId s, PhaseMerge merge) {
  if (!is_spider_alive(d, s) || d.degree(s) != 1) return false;
  if (!d.phase(s).is_pauli_valued()) return false;
  auto [v, k] = *d.neighbours(s).begin();
  if (!d.is_spider(v) || d.kind(v) == d.kind(s) || k != EdgeKind::Plain) return false;
  Scalar probe;
  return conditional_phase(probe, d.phase(v), split_pauli(d.phase(s)), merge);
}

RuleApplication state_copy(Diagram& d, VertexId s, PhaseMerge merge) {
  if (!can_state_copy(d, s, merge)) mismatch("state_copy", "pattern not matched");
  const VertexId v = d.neighbours(s).begin()->first;
  const ParamPhase ps = d.phase(s);
  const VertexKind ks = d.kind(s);
  Scalar f;
  conditional_phase(f, d.phase(v), split_pauli(ps), merge);
  std::vector<std::pair<VertexId, EdgeKind>> legs;
  for (const auto& [w, k] : d.neighbours(v)) {
    if (w != s) legs.emplace_back(w, k);
  }
  f.mul_sqrt2_pow(1 - static_cast<int>(legs.size()));
  d.remove_vertex(s);
  d.remove_vertex(v);
  for (const auto& [w, k] : legs) {
    VertexId c = d.add_vertex(ks, ps);
    d.add_edge(c, w, k);
  }
  d.scalar() *= f;
  return record("state_copy", {s}, f, merge);
}

bool can_bialgebra(const Diagram& d, VertexId z, VertexId x) {
  if (!is_spider_alive(d, z) || !is_spider_alive(d, x)) return false;
  if (d.kind(z) != VertexKind::Z || d.kind(x) != VertexKind::X) return false;
  if (!d.phase(z).is_zero() || !d.phase(x).is_zero()) return false;
  auto e = d.edge(z, x);
  return e && *e == EdgeKind::Plain && d.degree(z) >= 2 && d.degree(x) >= 2;
}

RuleApplication bialgebra(Diagram& d, VertexId z, VertexId x) {
  if (!can_bialgebra(d, z, x)) mismatch("bialgebra", "pattern not matched");
  std::vector<std::pair<VertexId, EdgeKind>> zl, xl;
  for (const auto& [w, k] : d.neighbours(z)) {
    if (w != x) zl.emplace_back(w, k);
  }
  for (const auto& [w, k] : d.neighbours(x)) {
    if (w != z) xl.emplace_back(w, k);
  }
  d.remove_vertex(z);
  d.remove_vertex(x);
  std::vector<VertexId> nx, nz;
  for (const auto& [w, k] : zl) {
    nx.push_back(d.add_x());
    d.add_edge(nx.back(), w, k);
  }
  for (const auto& [w, k] : xl) {
    nz.push_back(d.add_z());
    d.add_edge(nz.back(), w, k);
  }
  for (VertexId a : nx) {
    for (VertexId b : nz) d.add_edge(a, b, EdgeKind::Plain);
  }
  Scalar f;
  const int k = static_cast<int>(zl.size());
  const int l = static_cast<int>(xl.size());
  f.mul_sqrt2_pow((k - 1) * (l - 1));
  d.scalar() *= f;
  return record("bialgebra", {z, x}, f, PhaseMerge::Exact);
}

bool can_local_complement(const Diagram& d, VertexId v) {
  if (!is_spider_alive(d, v) || d.kind(v) != VertexKind::Z) return false;
  const ParamPhase& p = d.phase(v);
  if (!p.is_concrete() || !p.base.is_proper_clifford()) return false;
  if (!graph_like_around(d, v)) return false;
  for (const auto& [w, k] : d.neighbours(v)) {
    if (!d.phase(w).is_concrete()) return false;
  }
  return true;
}

RuleApplication local_complement(Diagram& d, VertexId v) {
  if (!can_local_complement(d, v)) mismatch("local_complement", "pattern not matched");
  const Phase a = d.phase(v).base;
  std::vector<VertexId> ns;
  for (const auto& [w, k] : d.neighbours(v)) ns.push_back(w);
  const int n = static_cast<int>(ns.size());
  d.remove_vertex(v);
  Scalar base_part;
  base_part.mul_sqrt2_pow((n - 1) * (n - 2) / 2);
  base_part.add_phase(a == Phase(2) ? Phase(1) : Phase(7));
  d.scalar() *= base_part;
  Scalar f = base_part;
  for (VertexId w : ns) d.add_to_phase(w, -a);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    for (std::size_t j = i + 1; j < ns.size(); ++j) f *= d.add_edge_smart(ns[i], ns[j], EdgeKind::Hadamard);
  }
  return record("local_complement", {v}, f, PhaseMerge::Exact);
}

bool can_pivot(const Diagram& d, VertexId u, VertexId v) {
  if (u == v || !is_spider_alive(d, u) || !is_spider_alive(d, v)) return false;
  if (d.kind(u) != VertexKind::Z || d.kind(v) != VertexKind::Z) return false;
  for (VertexId x : {u, v}) {
    const ParamPhase& p = d.phase(x);
    if (!p.is_concrete() || !p.base.is_pauli()) return false;
  }
  auto e = d.edge(u, v);
  if (!e || *e != EdgeKind::Hadamard) return false;
  if (!graph_like_around(d, u) || !graph_like_around(d, v)) return false;
  for (VertexId x : {u, v}) {
    for (const auto& [w, k] : d.neighbours(x)) {
      if (!d.phase(w).is_concrete()) return false;
    }
  }
  return true;
}

RuleApplication pivot(Diagram& d, VertexId u, VertexId v) {
  if (!can_pivot(d, u, v)) mismatch("pivot", "pattern not matched");
  const Phase pu = d.phase(u).base;
  const Phase pv = d.phase(v).base;
  std::vector<VertexId> only_u, only_v, both;
  for (const auto& [w, k] : d.neighbours(u)) {
    if (w == v) continue;
    (d.connected(v, w) ? both : only_u).push_back(w);
  }
  for (const auto& [w, k] : d.neighbours(v)) {
    if (w != u && !d.connected(u, w)) only_v.push_back(w);
  }
  d.remove_vertex(u);
  d.remove_vertex(v);
  Scalar base_part;
  const int k0 = static_cast<int>(only_u.size());
  const int k1 = static_cast<int>(only_v.size());
  const int k2 = static_cast<int>(both.size());
  base_part.mul_sqrt2_pow((k0 - 1) * k2 + (k1 - 1) * k2 + (k0 - 1) * (k1 - 1));
  if (pu == Phase::pi() && pv == Phase::pi()) base_part.add_phase(Phase::pi());
  Scalar f = base_part;
  d.scalar() *= base_part;
  for (VertexId w : only_u) d.add_to_phase(w, pv);
  for (VertexId w : only_v) d.add_to_phase(w, pu);
  for (VertexId w : both) d.add_to_phase(w, pu + pv + Phase::pi());
  auto toggle_all = [&](const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    for (VertexId x : a) {
      for (VertexId y : b) f *= d.add_edge_smart(x, y, EdgeKind::Hadamard);
    }
  };
  toggle_all(only_u, only_v);
  toggle_all(only_u, both);
  toggle_all(only_v, both);
  return record("pivot", {u, v}, f, PhaseMerge::Exact);
}

bool can_remove_scalar_spider(const Diagram& d, VertexId v) {
  return is_spider_alive(d, v) && d.degree(v) == 0 && d.phase(v).is_concrete();
}

RuleApplication remove_scalar_spider(Diagram& d, VertexId v) {
  if (!can_remove_scalar_spider(d, v)) mismatch("remove_scalar_spider", "not a legless concrete spider");
  Scalar f;
  f.mul_one_plus_phase(d.phase(v).base);
  d.remove_vertex(v);
  d.scalar() *= f;
  return record("remove_scalar_spider", {v}, f, PhaseMerge::Exact);
}

void replay(Diagram& d, const RuleApplication& app) {
  const auto& v = app.vertices;
  auto need = [&](std::size_t n) {
    if (v.size() != n) throw InputError("replay: " + app.rule + " expects " + std::to_string(n) + " vertices");
  };
  if (app.rule == "fuse") {
    need(2);
    fuse(d, v[0], v[1], app.merge);
  } else if (app.rule == "color_change") {
    need(1);
    color_change(d, v[0]);
  } else if (app.rule == "pi_commute") {
    need(2);
    pi_commute(d, v[0], v[1], app.merge);
  } else if (app.rule == "identity_remove") {
    need(1);
    identity_remove(d, v[0]);
  } else if (app.rule == "hadamard_cancel") {
    need(1);
    hadamard_cancel(d, v[0]);
  } else if (app.rule == "state_copy") {
    need(1);
    state_copy(d, v[0], app.merge);
  } else if (app.rule == "bialgebra") {
    need(2);
    bialgebra(d, v[0], v[1]);
  } else if (app.rule == "local_complement") {
    need(1);
    local_complement(d, v[0]);
  } else if (app.rule == "pivot") {
    need(2);
    pivot(d, v[0], v[1]);
  } else if (app.rule == "remove_scalar_spider") {
    need(1);
    remove_scalar_spider(d, v[0]);
  } else {
    throw InputError("replay: unknown rule '" + app.rule + "'");
  }
}

}  // namespace zxcut
