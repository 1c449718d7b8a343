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

#include "zxcut/serialize.hpp"

#include <cmath>
#include <exception>

#include "json.hpp"
#include "zxcut/cutter.hpp"
#include "zxcut/decomposer.hpp"
#include "zxcut/error.hpp"
#include "zxcut/procedure.hpp"

namespace zxcut {
namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError((where.empty() ? std::string("/") : where) + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing '") + key + "'");
  return *it;
}

template <typename T>
T read(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  try {
    return v.get<T>();
  } catch (const json::exception&) {
    fail(where + "/" + key, "wrong type");
  }
}

template <typename T>
T read_or(const json& obj, const char* key, T fallback, const std::string& where) {
  if (!obj.contains(key)) return fallback;
  return read<T>(obj, key, where);
}

json parity_json(const Parity& p) { return json(p.ids()); }

Parity read_parity(const json& obj, const char* key, const std::string& where) {
  return Parity::of(read_or<std::vector<ParamId>>(obj, key, {}, where));
}

json phase_json(const ParamPhase& p) {
  json j = json::object();
  j["phase"] = p.base.numerator();
  if (!p.parity.empty()) j["params"] = parity_json(p.parity);
  if (!p.negate.empty()) j["negate"] = parity_json(p.negate);
  if (p.opaque) j["opaque"] = true;
  return j;
}

ParamPhase read_phase(const json& obj, const std::string& where) {
  ParamPhase p;
  p.base = Phase(read_or<int>(obj, "phase", 0, where));
  p.parity = read_parity(obj, "params", where);
  p.negate = read_parity(obj, "negate", where);
  if (!p.negate.empty() && !p.base.is_t_like()) fail(where + "/negate", "negate set on a non-T-like phase");
  p.opaque = read_or<bool>(obj, "opaque", false, where);
  p.normalize();
  return p;
}

json scalar_json(const Scalar& s) {
  json j = json::object();
  if (s.is_zero()) {
    j["zero"] = true;
    return j;
  }
  j["sqrt2_power"] = s.sqrt2_power();
  j["phase"] = s.phase().numerator();
  j["extra"] = {s.extra().real(), s.extra().imag()};
  if (!s.factors().empty()) {
    json fs = json::array();
    for (const auto& f : s.factors()) fs.push_back({{"coefficient", f.coefficient.numerator()}, {"params", parity_json(f.parity)}});
    j["factors"] = fs;
  }
  if (s.is_opaque()) j["opaque"] = true;
  return j;
}

Scalar read_scalar(const json& j, const std::string& where) {
  if (read_or<bool>(j, "zero", false, where)) return Scalar::zero();
  auto extra = read_or<std::vector<double>>(j, "extra", {1.0, 0.0}, where);
  if (extra.size() != 2 || !std::isfinite(extra[0]) || !std::isfinite(extra[1])) {
    fail(where + "/extra", "expected [re, im]");
  }
  Scalar s = Scalar::from_parts(read_or<int>(j, "sqrt2_power", 0, where), Phase(read_or<int>(j, "phase", 0, where)),
                                {extra[0], extra[1]});
  if (j.contains("factors")) {
    const json& fs = j["factors"];
    if (!fs.is_array()) fail(where + "/factors", "expected an array");
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const std::string at = where + "/factors/" + std::to_string(i);
      s.mul_param_phase(Phase(read<int>(fs[i], "coefficient", at)), read_parity(fs[i], "params", at));
    }
  }
  if (read_or<bool>(j, "opaque", false, where)) s.mark_opaque();
  return s;
}

const char* kind_tag(VertexKind k) {
  switch (k) {
    case VertexKind::Z: return "Z";
    case VertexKind::X: return "X";
    case VertexKind::Boundary: return "B";
  }
  return "?";
}

json diagram_json(const Diagram& d) {
  json j = json::object();
  json vs = json::array();
  for (VertexId v : d.vertices()) {
    json e = {{"id", v}, {"kind", kind_tag(d.kind(v))}};
    if (d.is_spider(v)) e.update(phase_json(d.phase(v)));
    vs.push_back(e);
  }
  json es = json::array();
  for (const Edge& e : d.edges()) {
    es.push_back({{"u", e.u}, {"v", e.v}, {"kind", e.kind == EdgeKind::Plain ? "S" : "H"}});
  }
  j["vertices"] = vs;
  j["edges"] = es;
  j["inputs"] = d.inputs();
  j["outputs"] = d.outputs();
  j["scalar"] = scalar_json(d.scalar());
  return j;
}

Diagram read_diagram(const json& j, const std::string& where) {
  Diagram d;
  const json& vs = field(j, "vertices", where);
  if (!vs.is_array()) fail(where + "/vertices", "expected an array");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string at = where + "/vertices/" + std::to_string(i);
    const VertexId id = read<VertexId>(vs[i], "id", at);
    if (id < 0) fail(at + "/id", "negative id");
    if (id < d.id_bound() && d.alive(id)) fail(at + "/id", "duplicate id " + std::to_string(id));
    const std::string k = read<std::string>(vs[i], "kind", at);
    if (k == "B") {
      d.add_vertex_with_id(id, VertexKind::Boundary, {});
    } else if (k == "Z" || k == "X") {
      d.add_vertex_with_id(id, k == "Z" ? VertexKind::Z : VertexKind::X, read_phase(vs[i], at));
    } else {
      fail(at + "/kind", "unknown vertex kind '" + k + "'");
    }
  }
  const json& es = field(j, "edges", where);
  if (!es.is_array()) fail(where + "/edges", "expected an array");
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string at = where + "/edges/" + std::to_string(i);
    const VertexId u = read<VertexId>(es[i], "u", at);
    const VertexId v = read<VertexId>(es[i], "v", at);
    const std::string k = read<std::string>(es[i], "kind", at);
    if (k != "S" && k != "H") fail(at + "/kind", "unknown edge kind '" + k + "'");
    for (VertexId x : {u, v}) {
      if (x < 0 || x >= d.id_bound() || !d.alive(x)) fail(at, "no vertex " + std::to_string(x));
    }
    try {
      d.add_edge(u, v, k == "S" ? EdgeKind::Plain : EdgeKind::Hadamard);
    } catch (const PatternError& e) {
      fail(at, e.what());
    }
  }
  d.set_inputs(read_or<std::vector<VertexId>>(j, "inputs", {}, where));
  d.set_outputs(read_or<std::vector<VertexId>>(j, "outputs", {}, where));
  if (j.contains("scalar")) d.scalar() = read_scalar(j["scalar"], where + "/scalar");
  try {
    d.validate();
  } catch (const InputError& e) {
    fail(where, e.what());
  }
  return d;
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string count_string(const Count& c) { return c.str(); }

}  // namespace

std::string serialize(const Diagram& d) { return diagram_json(d).dump(2); }

Diagram deserialize(std::string_view text) { return read_diagram(parse(text), ""); }

std::string serialize(const ParamGraph& pg) {
  json j = diagram_json(pg.diagram);
  j["live"] = pg.live_params;
  json subs = json::array();
  for (const auto& [p, s] : pg.substitutions) {
    subs.push_back({{"param", p}, {"expr", parity_json(s.expr)}, {"constant", s.constant}});
  }
  j["substitutions"] = subs;
  j["next_param"] = pg.next_param;
  return j.dump(2);
}

ParamGraph deserialize_param_graph(std::string_view text) {
  const json j = parse(text);
  ParamGraph pg;
  pg.diagram = read_diagram(j, "");
  for (ParamId p : read_or<std::vector<ParamId>>(j, "live", {}, "")) pg.live_params.insert(p);
  if (j.contains("substitutions")) {
    const json& subs = j["substitutions"];
    if (!subs.is_array()) fail("/substitutions", "expected an array");
    for (std::size_t i = 0; i < subs.size(); ++i) {
      const std::string at = "/substitutions/" + std::to_string(i);
      const ParamId p = read<ParamId>(subs[i], "param", at);
      if (pg.live_params.count(p)) fail(at, "parameter p" + std::to_string(p) + " is both live and substituted");
      pg.substitutions[p] = {read_parity(subs[i], "expr", at), read_or<bool>(subs[i], "constant", false, at)};
    }
  }
  ParamId next = 0;
  for (ParamId p : pg.live_params) next = std::max(next, p + 1);
  for (const auto& [p, s] : pg.substitutions) next = std::max(next, p + 1);
  for (ParamId p : pg.diagram.params()) {
    if (!pg.live_params.count(p)) fail("/live", "parameter p" + std::to_string(p) + " is used but not live");
  }
  pg.next_param = read_or<ParamId>(j, "next_param", next, "");
  if (pg.next_param < next) fail("/next_param", "below a parameter in use");
  return pg;
}

std::string to_json(const ProcedureReport& r) {
  json j = json::object();
  j["mode"] = to_string(r.mode);
  json cuts = json::array();
  for (const auto& c : r.cuts) {
    json e = {{"vertex", c.vertex}, {"tier", c.tier}, {"weight", c.weight}, {"depth", c.depth}};
    if (c.param) e["param"] = *c.param;
    cuts.push_back(e);
  }
  j["cuts"] = cuts;
  j["cut_depth"] = r.cut_depth;
  j["t_start"] = r.t_start;
  j["residual_t"] = r.residual_t;
  j["leaves"] = r.leaves;
  j["terms"] = count_string(r.terms);
  j["alpha"] = r.alpha ? json(*r.alpha) : json(nullptr);
  j["complete"] = r.complete;
  if (!r.complete) j["incomplete_reason"] = r.incomplete_reason;
  if (r.value) j["value"] = {r.value->real(), r.value->imag()};
  if (r.param_graph) j["live_params"] = r.param_graph->num_live();
  return j.dump(2);
}

std::string to_json(const TermSum& t) {
  json j = json::object();
  j["mode"] = t.mode == CountMode::Exact ? "exact" : "blind";
  j["count"] = count_string(t.count);
  j["t_initial"] = t.t_initial;
  const auto alpha = effective_alpha(t.count, t.t_initial);
  j["alpha"] = alpha ? json(*alpha) : json(nullptr);
  if (t.mode == CountMode::Exact) j["sum"] = {t.sum.real(), t.sum.imag()};
  if (!t.log.empty()) j["log"] = t.log;
  return j.dump(2);
}

}  // namespace zxcut
