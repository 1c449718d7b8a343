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

#include "zxcut/decomposer.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <set>
#include <tuple>

#include "zxcut/cutter.hpp"
#include "zxcut/error.hpp"
#include "zxcut/simplify.hpp"

namespace zxcut {
namespace {

const double kSqrt2 = std::sqrt(2.0);

struct MagicTerm {
  Phase vertex_phase;
  double coefficient;
  int sqrt2_power;
  Phase phase;
  std::vector<Phase> extras;
  /// (a, b, kind) over indices 0..5 for the six vertices and 6.. for extras.
  std::vector<std::tuple<int, int, EdgeKind>> edges;
};

std::vector<MagicTerm> magic_terms() {
  std::vector<MagicTerm> t;
  t.push_back({Phase(0), -16 + 12 * kSqrt2, -6, Phase(0), {}, {}});
  t.push_back({Phase(4), 96 - 68 * kSqrt2, -6, Phase(4), {}, {}});
  MagicTerm e6{Phase(2), 10 - 7 * kSqrt2, 4, Phase(2), {Phase(4)}, {}};
  MagicTerm o6{Phase(2), -14 + 10 * kSqrt2, 4, Phase(2), {Phase(0)}, {}};
  MagicTerm k6{Phase(0), 7 - 5 * kSqrt2, 5, Phase(1), {Phase(6)}, {}};
  for (int i = 0; i < 6; ++i) {
    e6.edges.emplace_back(i, 6, EdgeKind::Hadamard);
    o6.edges.emplace_back(i, 6, EdgeKind::Hadamard);
    k6.edges.emplace_back(i, 6, EdgeKind::Plain);
  }
  t.push_back(e6);
  t.push_back(o6);
  t.push_back(k6);
  for (const auto& order : {std::array<int, 6>{0, 1, 2, 3, 4, 5}, std::array<int, 6>{0, 1, 3, 4, 5, 2}}) {
    MagicTerm phi{Phase(0), 10 - 7 * kSqrt2, 9, Phase(6), {Phase(4), Phase(0), Phase(0), Phase(0), Phase(0), Phase(0)}, {}};
    phi.edges.emplace_back(order[5], 6, EdgeKind::Plain);
    for (int k = 0; k < 5; ++k) {
      phi.edges.emplace_back(6, 7 + k, EdgeKind::Hadamard);
      phi.edges.emplace_back(order[k], 7 + k, EdgeKind::Hadamard);
    }
    for (auto [a, b] : {std::pair{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}}) {
      phi.edges.emplace_back(7 + a, 7 + b, EdgeKind::Hadamard);
    }
    t.push_back(phi);
  }
  return t;
}

/// -(7 + 5 sqrt2) / (2 + 2i), shared by every term.
std::complex<double> magic_global() { return -(7.0 + 5.0 * kSqrt2) / std::complex<double>(2.0, 2.0); }

}  // namespace

std::vector<Diagram> bss_decompose(const Diagram& d, const std::vector<VertexId>& six) {
  std::set<VertexId> distinct(six.begin(), six.end());
  if (six.size() != 6 || distinct.size() != 6) throw PatternError("bss_decompose: needs six distinct vertices");
  for (VertexId v : six) {
    if (!d.alive(v) || d.kind(v) != VertexKind::Z || !d.phase(v).is_concrete() || !d.phase(v).is_t_like()) {
      throw PatternError("bss_decompose: vertex " + std::to_string(v) + " is not a concrete T-like Z-spider");
    }
  }
  std::vector<Diagram> out;
  for (const MagicTerm& term : magic_terms()) {
    Diagram g = d;
    std::vector<VertexId> ids(six.begin(), six.end());
    for (VertexId v : six) g.set_phase(v, g.phase(v).base - Phase(1) + term.vertex_phase);
    for (Phase p : term.extras) ids.push_back(g.add_z(p));
    for (const auto& [a, b, k] : term.edges) g.add_edge(ids[a], ids[b], k);
    g.scalar().mul_complex(term.coefficient * magic_global());
    g.scalar().mul_sqrt2_pow(term.sqrt2_power);
    g.scalar().add_phase(term.phase);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Diagram> fallback_decompose(const Diagram& d) {
  const std::vector<VertexId> ts = d.t_vertices();
  if (ts.size() > 5) throw PatternError("fallback_decompose: T-count " + std::to_string(ts.size()) + " above 5");
  std::vector<Diagram> terms{d};
  for (VertexId v : ts) {
    std::vector<Diagram> next;
    for (const Diagram& g : terms) {
      CutBranchPair b = cut_vertex(g, v);
      next.push_back(std::move(b.branch0));
      next.push_back(std::move(b.branch1));
    }
    terms = std::move(next);
  }
  return terms;
}

TermSum decompose_bss_driver(const Diagram& d, const DriverOptions& opts) {
  TermSum ts;
  Diagram root = d;
  full_simplify(root);
  ts.t_initial = root.t_count();
  std::vector<Diagram> work;
  work.push_back(std::move(root));
  while (!work.empty()) {
    if (opts.budget && ts.count + work.size() > *opts.budget) {
      throw BudgetError("BSS driver: term budget of " + opts.budget->str() + " exhausted");
    }
    Diagram g = std::move(work.back());
    work.pop_back();
    if (g.scalar().is_zero()) {
      ++ts.count;
      if (opts.keep_terms) ts.values.emplace_back(0.0);
      continue;
    }
    const std::vector<VertexId> tv = g.t_vertices();
    if (tv.empty()) {
      const std::complex<double> value = reduce_scalar_clifford(std::move(g)).value();
      ++ts.count;
      ts.sum += value;
      if (opts.keep_terms) ts.values.push_back(value);
      continue;
    }
    std::vector<Diagram> terms;
    if (tv.size() >= 6) {
      terms = bss_decompose(g, {tv.begin(), tv.begin() + 6});
    } else if (tv.size() >= 3) {
      // Pad with disconnected T states; 7 terms beat 2^t cuts here.
      std::vector<VertexId> six = tv;
      const std::complex<double> lone = 1.0 + std::polar(1.0, Phase(1).radians());
      while (six.size() < 6) {
        six.push_back(g.add_z(Phase(1)));
        g.scalar().mul_complex(1.0 / lone);
      }
      terms = bss_decompose(g, six);
    } else {
      CutBranchPair b = cut_vertex(g, tv.front());
      terms.push_back(std::move(b.branch0));
      terms.push_back(std::move(b.branch1));
    }
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      full_simplify(*it);
      work.push_back(std::move(*it));
    }
  }
  return ts;
}

Count blind_estimate_bss(std::size_t t) {
  Count c = 1;
  for (std::size_t i = 0; i < t / 6; ++i) c *= 7;
  return c << (t % 6);
}

TermSum blind_bss(std::size_t t_initial) {
  TermSum ts;
  ts.mode = CountMode::Blind;
  ts.count = blind_estimate_bss(t_initial);
  ts.t_initial = t_initial;
  ts.log.push_back(std::to_string(t_initial / 6) + " BSS groups, " + std::to_string(t_initial % 6) + " single cuts");
  return ts;
}

double log2_count(const Count& c) {
  if (c <= 0) return -std::numeric_limits<double>::infinity();
  const std::size_t top = boost::multiprecision::msb(c);
  if (top < 53) return std::log2(c.convert_to<double>());
  const std::size_t shift = top - 52;
  return std::log2(Count(c >> shift).convert_to<double>()) + static_cast<double>(shift);
}

std::optional<double> effective_alpha(const Count& terms, std::size_t t_initial) {
  if (t_initial == 0) return std::nullopt;
  return log2_count(terms) / static_cast<double>(t_initial);
}

}  // namespace zxcut
