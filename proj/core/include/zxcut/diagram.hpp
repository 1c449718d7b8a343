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

#include <boost/container/flat_map.hpp>
#include <cstdint>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "zxcut/phase.hpp"
#include "zxcut/scalar.hpp"

namespace zxcut {

enum class VertexKind : std::uint8_t { Z, X, Boundary };
enum class EdgeKind : std::uint8_t { Plain, Hadamard };

constexpr EdgeKind toggled(EdgeKind k) {
  return k == EdgeKind::Plain ? EdgeKind::Hadamard : EdgeKind::Plain;
}
/// Kind of the edge obtained by joining two edges through an identity.
constexpr EdgeKind compose(EdgeKind a, EdgeKind b) { return a == b ? EdgeKind::Plain : EdgeKind::Hadamard; }
constexpr VertexKind opposite(VertexKind k) { return k == VertexKind::Z ? VertexKind::X : VertexKind::Z; }

const char* to_string(VertexKind k);
const char* to_string(EdgeKind k);

using VertexId = int;
using Neighbours = boost::container::flat_map<VertexId, EdgeKind>;

struct Edge {
  VertexId u;
  VertexId v;
  EdgeKind kind;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// An open ZX-diagram with an exact global scalar.
///
/// Vertex ids are never reused; removed vertices leave holes until
/// canonicalized() compacts them.
class Diagram {
 public:
  VertexId add_vertex(VertexKind kind, ParamPhase phase = {});
  VertexId add_z(ParamPhase p = {}) { return add_vertex(VertexKind::Z, p); }
  VertexId add_x(ParamPhase p = {}) { return add_vertex(VertexKind::X, p); }
  VertexId add_input();
  VertexId add_output();
  void remove_vertex(VertexId v);

  bool alive(VertexId v) const;
  /// One past the largest id ever allocated.
  VertexId id_bound() const { return static_cast<VertexId>(verts_.size()); }
  std::size_t num_vertices() const { return live_; }
  std::vector<VertexId> vertices() const;

  VertexKind kind(VertexId v) const { return at(v).kind; }
  void set_kind(VertexId v, VertexKind k) { at(v).kind = k; }
  bool is_spider(VertexId v) const { return kind(v) != VertexKind::Boundary; }
  bool is_boundary(VertexId v) const { return kind(v) == VertexKind::Boundary; }
  const ParamPhase& phase(VertexId v) const { return at(v).phase; }
  void set_phase(VertexId v, ParamPhase p);
  void add_to_phase(VertexId v, Phase p);

  const Neighbours& neighbours(VertexId v) const { return at(v).nbrs; }
  std::size_t degree(VertexId v) const { return at(v).nbrs.size(); }
  std::optional<EdgeKind> edge(VertexId u, VertexId v) const;
  bool connected(VertexId u, VertexId v) const { return edge(u, v).has_value(); }

  /// Raw insertion; throws PatternError on self-loops or existing edges.
  void add_edge(VertexId u, VertexId v, EdgeKind k);
  void remove_edge(VertexId u, VertexId v);
  void set_edge_kind(VertexId u, VertexId v, EdgeKind k);
  /// Inserts an edge, resolving self-loops and parallel edges between spiders
  /// into phases and scalar factors. Returns the factor applied to the scalar.
  Scalar add_edge_smart(VertexId u, VertexId v, EdgeKind k);
  std::size_t num_edges() const { return edges_; }
  std::vector<Edge> edges() const;

  const std::vector<VertexId>& inputs() const { return inputs_; }
  const std::vector<VertexId>& outputs() const { return outputs_; }
  void set_inputs(std::vector<VertexId> ids) { inputs_ = std::move(ids); }
  void set_outputs(std::vector<VertexId> ids) { outputs_ = std::move(ids); }
  bool is_scalar_diagram() const { return inputs_.empty() && outputs_.empty(); }

  Scalar& scalar() { return scalar_; }
  const Scalar& scalar() const { return scalar_; }

  /// Spiders with a T-like (odd) base phase.
  std::size_t t_count() const;
  std::vector<VertexId> t_vertices() const;
  std::size_t num_spiders() const;
  bool is_concrete() const;
  std::set<ParamId> params() const;

  /// Throws InputError on any broken invariant.
  void validate() const;
  /// Dense ids in the order of the current ids.
  Diagram canonicalized() const;
  /// Disjoint union; scalars multiply and boundary lists concatenate.
  /// Returns the id map from `other` into this diagram.
  std::vector<VertexId> append(const Diagram& other);

  /// Used when loading documents; ids beyond id_bound() are allocated as
  /// dead placeholders.
  void add_vertex_with_id(VertexId id, VertexKind kind, ParamPhase phase);

  friend bool operator==(const Diagram& a, const Diagram& b);

 private:
  struct Vertex {
    VertexKind kind = VertexKind::Z;
    ParamPhase phase;
    Neighbours nbrs;
    bool alive = false;
  };

  Vertex& at(VertexId v);
  const Vertex& at(VertexId v) const;

  std::vector<Vertex> verts_;
  std::size_t live_ = 0;
  std::size_t edges_ = 0;
  std::vector<VertexId> inputs_;
  std::vector<VertexId> outputs_;
  Scalar scalar_;
};

}  // namespace zxcut
