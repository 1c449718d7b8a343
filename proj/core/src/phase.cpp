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

#include "zxcut/phase.hpp"

#include <algorithm>
#include <numbers>

#include "zxcut/error.hpp"

namespace zxcut {

double Phase::radians() const { return num_ * std::numbers::pi / 4.0; }

std::string Phase::to_string() const {
  static const char* const kNames[8] = {"0",    "pi/4",  "pi/2",  "3pi/4",
                                        "pi",   "5pi/4", "3pi/2", "7pi/4"};
  return kNames[num_];
}

Parity Parity::of(std::vector<ParamId> ids) {
  std::sort(ids.begin(), ids.end());
  Parity p;
  for (std::size_t i = 0; i < ids.size();) {
    std::size_t j = i;
    while (j < ids.size() && ids[j] == ids[i]) ++j;
    if ((j - i) % 2 == 1) p.ids_.push_back(ids[i]);
    i = j;
  }
  return p;
}

bool Parity::contains(ParamId p) const { return std::binary_search(ids_.begin(), ids_.end(), p); }

void Parity::toggle(ParamId p) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), p);
  if (it != ids_.end() && *it == p) {
    ids_.erase(it);
  } else {
    ids_.insert(it, p);
  }
}

Parity& Parity::operator^=(const Parity& o) {
  std::vector<ParamId> out;
  out.reserve(ids_.size() + o.ids_.size());
  std::set_symmetric_difference(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(),
                                std::back_inserter(out));
  ids_ = std::move(out);
  return *this;
}

bool Parity::evaluate(const Assignment& a) const {
  bool v = false;
  for (ParamId p : ids_) {
    auto it = a.find(p);
    if (it == a.end()) throw InputError("parameter " + std::to_string(p) + " is unassigned");
    v ^= it->second;
  }
  return v;
}

bool Parity::substitute(ParamId p, const Parity& expr, bool constant) {
  if (!contains(p)) return false;
  toggle(p);
  *this ^= expr;
  return constant;
}

std::string Parity::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i) s += "^";
    s += "p" + std::to_string(ids_[i]);
  }
  return s;
}

Phase ParamPhase::concrete() const {
  if (!is_concrete()) throw PatternError("phase " + to_string() + " is not concrete");
  return base;
}

Phase ParamPhase::evaluate(const Assignment& a) const {
  if (opaque) throw PatternError("opaque phase cannot be evaluated");
  Phase v = negate.evaluate(a) ? -base : base;
  if (parity.evaluate(a)) v += Phase::pi();
  return v;
}

void ParamPhase::normalize() {
  if (opaque) {
    parity.clear();
    negate.clear();
    return;
  }
  if (!negate.empty() && base.is_clifford()) {
    // -b = b + pi when b = +-pi/2, and -b = b when b is 0 or pi.
    if (base.is_proper_clifford()) parity ^= negate;
    negate.clear();
  }
}

void ParamPhase::negate_by(const Parity& cond, bool constant) {
  if (opaque) return;
  if (constant) base = -base;
  negate ^= cond;
  normalize();
}

void ParamPhase::substitute(ParamId p, const Parity& expr, bool constant) {
  if (opaque) return;
  if (parity.substitute(p, expr, constant)) base += Phase::pi();
  if (negate.substitute(p, expr, constant)) base = -base;
  normalize();
}

void ParamPhase::make_opaque() {
  opaque = true;
  normalize();
}

std::string ParamPhase::to_string() const {
  std::string s = base.to_string();
  if (opaque) return "?" + s;
  if (!negate.empty()) s = "(-1)^(" + negate.to_string() + ")*" + s;
  if (!parity.empty()) s += "+pi*(" + parity.to_string() + ")";
  return s;
}

std::optional<ParamPhase> add_exact(const ParamPhase& a, const ParamPhase& b) {
  if (a.opaque || b.opaque) return std::nullopt;
  ParamPhase r;
  r.base = a.base + b.base;
  r.parity = a.parity ^ b.parity;
  if (a.negate == b.negate) {
    r.negate = a.negate;
  } else if (a.negate.empty() && a.base.is_clifford()) {
    // a = (-1)^N a + pi*[N] when a = +-pi/2
    r.negate = b.negate;
    if (a.base.is_proper_clifford()) r.parity ^= b.negate;
  } else if (b.negate.empty() && b.base.is_clifford()) {
    r.negate = a.negate;
    if (b.base.is_proper_clifford()) r.parity ^= a.negate;
  } else {
    return std::nullopt;
  }
  r.normalize();
  return r;
}

ParamPhase add_lossy(const ParamPhase& a, const ParamPhase& b) {
  if (auto r = add_exact(a, b)) return *r;
  ParamPhase r(a.base + b.base);
  r.make_opaque();
  return r;
}

}  // namespace zxcut
