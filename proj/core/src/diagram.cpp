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

#include "zxcut/diagram.hpp"

#include <algorithm>
#include <string>

#include "zxcut/error.hpp"

namespace zxcut {

const char* to_string(VertexKind k) {
  switch (k) {
    case VertexKind::Z:
      return "Z";
    case VertexKind::X:
      return "X";
    case VertexKind::Boundary:
      return "B";
  }
  return "?";
}

const char* to_string(EdgeKind k) { return k == EdgeKind::Plain ? "S" : "H"; }

Diagram::Vertex& Diagram::at(VertexId v) {
  if (v < 0 || v >= id_bound() || !verts_[v].alive) {
    throw PatternError("no vertex with id " + std::to_string(v));
  }
  return verts_[v];
}

const Diagram::Vertex& Diagram::at(VertexId v) const {
  if (v < 0 || v >= id_bound() || !verts_[v].alive) {
    throw PatternError("no vertex with id " + std::to_string(v));
  }
  return verts_[v];
}

VertexId Diagram::add_vertex(VertexKind kind, ParamPhase phase) {
  Vertex vx;
  vx.kind = kind;
  vx.phase = std::move(phase);
  vx.alive = true;
  verts_.push_back(std::move(vx));
  ++live_;
  return id_bound() - 1;
}

void Diagram::add_vertex_with_id(VertexId id, VertexKind kind, ParamPhase phase) {
  if (id < 0) throw InputError("negative vertex id");
  if (id < id_bound() && verts_[id].alive) throw InputError("duplicate vertex id " + std::to_string(id));
  if (id >= id_bound()) verts_.resize(id + 1);
  verts_[id].kind = kind;
  verts_[id].phase = std::move(phase);
  verts_[id].alive = true;
  ++live_;
}

VertexId Diagram::add_input() {
  VertexId v = add_vertex(VertexKind::Boundary);
  inputs_.push_back(v);
  return v;
}

VertexId Diagram::add_output() {
  VertexId v = add_vertex(VertexKind::Boundary);
  outputs_.push_back(v);
  return v;
}

void Diagram::remove_vertex(VertexId v) {
  Vertex& vx = at(v);
  for (const auto& [w, k] : vx.nbrs) {
    verts_[w].nbrs.erase(v);
    --edges_;
  }
  vx.nbrs.clear();
  vx.alive = false;
  --live_;
  std::erase(inputs_, v);
  std::erase(outputs_, v);
}

bool Diagram::alive(VertexId v) const { return v >= 0 && v < id_bound() && verts_[v].alive; }

std::vector<VertexId> Diagram::vertices() const {
  std::vector<VertexId> out;
  out.reserve(live_);
  for (VertexId v = 0; v < id_bound(); ++v) {
    if (verts_[v].alive) out.push_back(v);
  }
  return out;
}

void Diagram::set_phase(VertexId v, ParamPhase p) {
  p.normalize();
  at(v).phase = std::move(p);
}

void Diagram::add_to_phase(VertexId v, Phase p) {
  if (phase(v).opaque) {
    ParamPhase q = phase(v);
    q.base += p;
    q.make_opaque();
    at(v).phase = std::move(q);
    return;
  }
  auto r = add_exact(phase(v), ParamPhase(p));
  if (!r) throw PatternError("phase sum is not representable exactly");
  at(v).phase = std::move(*r);
}

std::optional<EdgeKind> Diagram::edge(VertexId u, VertexId v) const {
  const auto& n = at(u).nbrs;
  auto it = n.find(v);
  if (it == n.end()) return std::nullopt;
  return it->second;
}

void Diagram::add_edge(VertexId u, VertexId v, EdgeKind k) {
  if (u == v) throw PatternError("self-loop on vertex " + std::to_string(u));
  Vertex& a = at(u);
  Vertex& b = at(v);
  if (a.nbrs.contains(v)) {
    throw PatternError("edge " + std::to_string(u) + "-" + std::to_string(v) + " already exists");
  }
  a.nbrs.emplace(v, k);
  b.nbrs.emplace(u, k);
  ++edges_;
}

void Diagram::remove_edge(VertexId u, VertexId v) {
  if (at(u).nbrs.erase(v) == 0) {
    throw PatternError("no edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  at(v).nbrs.erase(u);
  --edges_;
}

void Diagram::set_edge_kind(VertexId u, VertexId v, EdgeKind k) {
  auto& nu = at(u).nbrs;
  auto it = nu.find(v);
  if (it == nu.end()) throw PatternError("no edge " + std::to_string(u) + "-" + std::to_string(v));
  it->second = k;
  at(v).nbrs[u] = k;
}

Scalar Diagram::add_edge_smart(VertexId u, VertexId v, EdgeKind k) {
  Scalar f;
  if (u == v) {
    if (!is_spider(u)) throw PatternError("self-loop on a boundary");
    if (k == EdgeKind::Hadamard) {
      add_to_phase(u, Phase::pi());
      f.mul_sqrt2_pow(-1);
    }
  } else if (auto existing = edge(u, v); !existing) {
    add_edge(u, v, k);
  } else {
    if (!is_spider(u) || !is_spider(v)) throw PatternError("parallel edge at a boundary");
    // Between opposite colours the roles of plain and Hadamard swap.
    const EdgeKind fusing = kind(u) == kind(v) ? EdgeKind::Plain : EdgeKind::Hadamard;
    if (*existing == fusing && k == fusing) {
      // two fusing edges act as one
    } else if (*existing != fusing && k != fusing) {
      remove_edge(u, v);
      f.mul_sqrt2_pow(-2);
    } else {
      set_edge_kind(u, v, fusing);
      add_to_phase(u, Phase::pi());
      f.mul_sqrt2_pow(-1);
    }
  }
  scalar_ *= f;
  return f;
}

std::vector<Edge> Diagram::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (VertexId v = 0; v < id_bound(); ++v) {
    if (!verts_[v].alive) continue;
    for (const auto& [w, k] : verts_[v].nbrs) {
      if (v < w) out.push_back({v, w, k});
    }
  }
  return out;
}

std::size_t Diagram::t_count() const {
  std::size_t n = 0;
  for (const auto& vx : verts_) {
    if (vx.alive && vx.kind != VertexKind::Boundary && vx.phase.is_t_like()) ++n;
  }
  return n;
}

std::vector<VertexId> Diagram::t_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < id_bound(); ++v) {
    const auto& vx = verts_[v];
    if (vx.alive && vx.kind != VertexKind::Boundary && vx.phase.is_t_like()) out.push_back(v);
  }
  return out;
}

std::size_t Diagram::num_spiders() const {
  std::size_t n = 0;
  for (const auto& vx : verts_) {
    if (vx.alive && vx.kind != VertexKind::Boundary) ++n;
  }
  return n;
}

bool Diagram::is_concrete() const {
  if (scalar_.is_parametric()) return false;
  return std::all_of(verts_.begin(), verts_.end(),
                     [](const Vertex& vx) { return !vx.alive || vx.phase.is_concrete(); });
}

std::set<ParamId> Diagram::params() const {
  std::set<ParamId> out;
  for (const auto& vx : verts_) {
    if (!vx.alive) continue;
    out.insert(vx.phase.parity.ids().begin(), vx.phase.parity.ids().end());
    out.insert(vx.phase.negate.ids().begin(), vx.phase.negate.ids().end());
  }
  for (const auto& f : scalar_.factors()) out.insert(f.parity.ids().begin(), f.parity.ids().end());
  return out;
}

void Diagram::validate() const {
  std::size_t count = 0;
  std::size_t ends = 0;
  for (VertexId v = 0; v < id_bound(); ++v) {
    const auto& vx = verts_[v];
    if (!vx.alive) continue;
    ++count;
    for (const auto& [w, k] : vx.nbrs) {
      if (w == v) throw InputError("self-loop on vertex " + std::to_string(v));
      if (!alive(w)) throw InputError("edge to missing vertex " + std::to_string(w));
      auto back = verts_[w].nbrs.find(v);
      if (back == verts_[w].nbrs.end() || back->second != k) {
        throw InputError("asymmetric edge " + std::to_string(v) + "-" + std::to_string(w));
      }
      ++ends;
    }
    if (vx.kind == VertexKind::Boundary) {
      if (!vx.phase.is_zero()) throw InputError("boundary " + std::to_string(v) + " carries a phase");
      if (vx.nbrs.size() != 1) throw InputError("boundary " + std::to_string(v) + " must have degree 1");
    }
  }
  if (count != live_ || ends != 2 * edges_) throw InputError("inconsistent vertex or edge counts");
  std::set<VertexId> seen;
  for (const auto* list : {&inputs_, &outputs_}) {
    for (VertexId b : *list) {
      if (!alive(b) || verts_[b].kind != VertexKind::Boundary) {
        throw InputError("boundary list entry " + std::to_string(b) + " is not a boundary vertex");
      }
      if (!seen.insert(b).second) throw InputError("boundary " + std::to_string(b) + " listed twice");
    }
  }
  for (VertexId v = 0; v < id_bound(); ++v) {
    if (alive(v) && verts_[v].kind == VertexKind::Boundary && !seen.contains(v)) {
      throw InputError("boundary " + std::to_string(v) + " is not an input or output");
    }
  }
}

Diagram Diagram::canonicalized() const {
  std::vector<VertexId> map(verts_.size(), -1);
  Diagram out;
  for (VertexId v = 0; v < id_bound(); ++v) {
    if (verts_[v].alive) map[v] = out.add_vertex(verts_[v].kind, verts_[v].phase);
  }
  for (const auto& e : edges()) out.add_edge(map[e.u], map[e.v], e.kind);
  for (VertexId b : inputs_) out.inputs_.push_back(map[b]);
  for (VertexId b : outputs_) out.outputs_.push_back(map[b]);
  out.scalar_ = scalar_;
  return out;
}

std::vector<VertexId> Diagram::append(const Diagram& other) {
  std::vector<VertexId> map(other.verts_.size(), -1);
  for (VertexId v = 0; v < other.id_bound(); ++v) {
    if (other.verts_[v].alive) map[v] = add_vertex(other.verts_[v].kind, other.verts_[v].phase);
  }
  for (const auto& e : other.edges()) add_edge(map[e.u], map[e.v], e.kind);
  for (VertexId b : other.inputs_) inputs_.push_back(map[b]);
  for (VertexId b : other.outputs_) outputs_.push_back(map[b]);
  scalar_ *= other.scalar_;
  return map;
}

bool operator==(const Diagram& a, const Diagram& b) {
  if (a.id_bound() != b.id_bound() || a.live_ != b.live_ || a.edges_ != b.edges_) return false;
  if (a.inputs_ != b.inputs_ || a.outputs_ != b.outputs_ || !(a.scalar_ == b.scalar_)) return false;
  for (VertexId v = 0; v < a.id_bound(); ++v) {
    const auto& x = a.verts_[v];
    const auto& y = b.verts_[v];
    if (x.alive != y.alive) return false;
    if (!x.alive) continue;
    if (x.kind != y.kind || !(x.phase == y.phase) || x.nbrs != y.nbrs) return false;
  }
  return true;
}

}  // namespace zxcut
