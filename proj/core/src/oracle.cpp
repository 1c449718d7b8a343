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

#include "zxcut/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "zxcut/error.hpp"

namespace zxcut {
namespace {

using cd = std::complex<double>;

struct Tensor {
  std::vector<int> idx;  // most significant first
  std::vector<cd> data;
};

class OffsetTable {
 public:
  explicit OffsetTable(const std::vector<std::size_t>& weights) {
    for (std::size_t c = 0; c * 8 < weights.size(); ++c) {
      std::array<std::size_t, 256> t{};
      for (std::size_t v = 0; v < 256; ++v) {
        std::size_t o = 0;
        for (std::size_t b = 0; b < 8 && c * 8 + b < weights.size(); ++b) {
          if ((v >> b) & 1) o += weights[c * 8 + b];
        }
        t[v] = o;
      }
      chunks_.push_back(t);
    }
  }
  std::size_t operator()(std::size_t x) const {
    std::size_t o = 0;
    for (std::size_t c = 0; c < chunks_.size(); ++c) o += chunks_[c][(x >> (8 * c)) & 255];
    return o;
  }

 private:
  std::vector<std::array<std::size_t, 256>> chunks_;
};

std::size_t position_weight(const Tensor& t, int index) {
  auto it = std::find(t.idx.begin(), t.idx.end(), index);
  std::size_t pos = static_cast<std::size_t>(it - t.idx.begin());
  return std::size_t{1} << (t.idx.size() - 1 - pos);
}

Tensor contract(const Tensor& a, const Tensor& b) {
  std::vector<int> shared;
  std::vector<int> res;
  for (int i : a.idx) {
    if (std::find(b.idx.begin(), b.idx.end(), i) != b.idx.end()) {
      shared.push_back(i);
    } else {
      res.push_back(i);
    }
  }
  for (int i : b.idx) {
    if (std::find(a.idx.begin(), a.idx.end(), i) == a.idx.end()) res.push_back(i);
  }
  const std::size_t R = res.size();
  const std::size_t S = shared.size();
  // bit j of a counter is position (n-1-j)
  std::vector<std::size_t> wa_res(R, 0), wb_res(R, 0), wa_sh(S), wb_sh(S);
  for (std::size_t p = 0; p < R; ++p) {
    int i = res[p];
    bool in_a = std::find(a.idx.begin(), a.idx.end(), i) != a.idx.end();
    (in_a ? wa_res : wb_res)[R - 1 - p] = position_weight(in_a ? a : b, i);
  }
  for (std::size_t p = 0; p < S; ++p) {
    wa_sh[S - 1 - p] = position_weight(a, shared[p]);
    wb_sh[S - 1 - p] = position_weight(b, shared[p]);
  }
  OffsetTable ta(wa_res), tb(wb_res);
  OffsetTable tsa(wa_sh), tsb(wb_sh);
  const std::size_t ns = std::size_t{1} << S;
  std::vector<std::size_t> sa(ns), sb(ns);
  for (std::size_t s = 0; s < ns; ++s) {
    sa[s] = tsa(s);
    sb[s] = tsb(s);
  }
  Tensor out;
  out.idx = res;
  out.data.assign(std::size_t{1} << R, cd{});
  for (std::size_t r = 0; r < out.data.size(); ++r) {
    const std::size_t ar = ta(r);
    const std::size_t br = tb(r);
    cd acc{};
    for (std::size_t s = 0; s < ns; ++s) acc += a.data[ar + sa[s]] * b.data[br + sb[s]];
    out.data[r] = acc;
  }
  return out;
}

Tensor spider_tensor(VertexKind kind, Phase phase, std::vector<int> idx) {
  const std::size_t n = idx.size();
  Tensor t;
  t.idx = std::move(idx);
  t.data.assign(std::size_t{1} << n, cd{});
  const cd e = std::polar(1.0, phase.radians());
  if (kind == VertexKind::Z) {
    t.data[0] += 1.0;
    t.data[t.data.size() - 1] += e;
  } else {
    const double norm = std::pow(std::numbers::sqrt2, -static_cast<double>(n));
    for (std::size_t x = 0; x < t.data.size(); ++x) {
      double sign = (std::popcount(x) % 2 == 0) ? 1.0 : -1.0;
      t.data[x] = norm * (1.0 + e * sign);
    }
  }
  return t;
}

Tensor hadamard_tensor(int i, int j) {
  const double h = 1.0 / std::numbers::sqrt2;
  return Tensor{{i, j}, {h, h, h, -h}};
}

Tensor identity_tensor(int i, int j) { return Tensor{{i, j}, {1.0, 0.0, 0.0, 1.0}}; }

}  // namespace

DenseMap evaluate(const Diagram& d, const OracleLimits& limits) {
  const std::size_t nb = d.inputs().size() + d.outputs().size();
  if (nb > limits.max_boundaries) {
    throw LimitError("oracle: " + std::to_string(nb) + " boundaries exceeds limit " +
                     std::to_string(limits.max_boundaries));
  }
  if (!d.is_concrete()) throw PatternError("oracle: parametric phases are not supported");

  DenseMap out;
  out.outputs = static_cast<int>(d.outputs().size());
  out.inputs = static_cast<int>(d.inputs().size());
  out.data.assign(out.rows() * out.cols(), cd{});
  if (d.scalar().is_zero()) return out;

  int next_index = 0;
  std::map<std::pair<VertexId, VertexId>, int> half;  // (vertex, neighbour) -> index
  std::vector<Tensor> tensors;
  for (const Edge& e : d.edges()) {
    if (e.kind == EdgeKind::Plain) {
      int i = next_index++;
      half[{e.u, e.v}] = i;
      half[{e.v, e.u}] = i;
    } else {
      int i = next_index++;
      int j = next_index++;
      half[{e.u, e.v}] = i;
      half[{e.v, e.u}] = j;
      tensors.push_back(hadamard_tensor(i, j));
    }
  }
  std::map<VertexId, int> open;
  for (VertexId v : d.vertices()) {
    std::vector<int> idx;
    for (const auto& [w, k] : d.neighbours(v)) idx.push_back(half.at({v, w}));
    if (d.is_boundary(v)) {
      int o = next_index++;
      open[v] = o;
      tensors.push_back(identity_tensor(o, idx.at(0)));
    } else {
      if (idx.size() > limits.max_rank) throw LimitError("oracle: spider degree exceeds rank limit");
      tensors.push_back(spider_tensor(d.kind(v), d.phase(v).concrete(), std::move(idx)));
    }
  }

  Tensor acc{{}, {1.0}};
  while (!tensors.empty()) {
    std::size_t bi = 0, bj = 0;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    bool found = false;
    for (std::size_t i = 0; i < tensors.size(); ++i) {
      for (std::size_t j = i + 1; j < tensors.size(); ++j) {
        std::size_t sh = 0;
        for (int x : tensors[i].idx) {
          if (std::find(tensors[j].idx.begin(), tensors[j].idx.end(), x) != tensors[j].idx.end()) ++sh;
        }
        if (sh == 0) continue;
        std::size_t rank = tensors[i].idx.size() + tensors[j].idx.size() - 2 * sh;
        if (rank < best) {
          best = rank;
          bi = i;
          bj = j;
          found = true;
        }
      }
    }
    if (!found) {
      // Remaining tensors are disconnected; fold them into the accumulator.
      std::sort(tensors.begin(), tensors.end(),
                [](const Tensor& x, const Tensor& y) { return x.idx.size() < y.idx.size(); });
      for (const Tensor& t : tensors) {
        if (acc.idx.size() + t.idx.size() > limits.max_rank) throw LimitError("oracle: rank limit exceeded");
        acc = contract(acc, t);
      }
      tensors.clear();
      break;
    }
    if (best > limits.max_rank) throw LimitError("oracle: rank limit exceeded");
    Tensor merged = contract(tensors[bi], tensors[bj]);
    tensors.erase(tensors.begin() + static_cast<std::ptrdiff_t>(bj));
    tensors[bi] = std::move(merged);
  }

  std::vector<int> order;
  for (VertexId b : d.outputs()) order.push_back(open.at(b));
  for (VertexId b : d.inputs()) order.push_back(open.at(b));
  const cd s = d.scalar().value();
  for (std::size_t x = 0; x < out.data.size(); ++x) {
    std::size_t off = 0;
    for (std::size_t p = 0; p < order.size(); ++p) {
      if ((x >> (order.size() - 1 - p)) & 1) off += position_weight(acc, order[p]);
    }
    out.data[x] = s * acc.data[off];
  }
  return out;
}

std::complex<double> evaluate_scalar(const Diagram& d, const OracleLimits& limits) {
  if (!d.is_scalar_diagram()) throw PatternError("oracle: diagram has open boundaries");
  return evaluate(d, limits).data.at(0);
}

namespace {

constexpr int kMaxStatevectorQubits = 12;

class Statevector {
 public:
  explicit Statevector(int n, std::size_t basis) : n_(n), amp_(std::size_t{1} << n, cd{}) {
    amp_[basis] = 1.0;
  }

  std::size_t mask(int q) const { return std::size_t{1} << (n_ - 1 - q); }

  void phase(int q, Phase p) {
    const cd e = std::polar(1.0, p.radians());
    for (std::size_t x = 0; x < amp_.size(); ++x) {
      if (x & mask(q)) amp_[x] *= e;
    }
  }
  void h(int q) {
    const double r = 1.0 / std::numbers::sqrt2;
    for (std::size_t x = 0; x < amp_.size(); ++x) {
      if (x & mask(q)) continue;
      cd a = amp_[x];
      cd b = amp_[x | mask(q)];
      amp_[x] = r * (a + b);
      amp_[x | mask(q)] = r * (a - b);
    }
  }
  void controlled_x(std::size_t controls, int t) {
    for (std::size_t x = 0; x < amp_.size(); ++x) {
      if ((x & controls) == controls && !(x & mask(t))) std::swap(amp_[x], amp_[x | mask(t)]);
    }
  }

  void apply(const Gate& g) {
    const auto& q = g.qubits;
    switch (g.type) {
      case GateType::CNOT:
        controlled_x(mask(q[0]), q[1]);
        break;
      case GateType::T:
        phase(q[0], Phase(1));
        break;
      case GateType::S:
        phase(q[0], Phase(2));
        break;
      case GateType::Z:
        phase(q[0], Phase(4));
        break;
      case GateType::Phase:
        phase(q[0], Phase(g.phase));
        break;
      case GateType::H:
        h(q[0]);
        break;
      case GateType::Toffoli:
        controlled_x(mask(q[0]) | mask(q[1]), q[2]);
        break;
      case GateType::Sandwich:
        phase(q[1], Phase(1));
        controlled_x(mask(q[0]), q[1]);
        phase(q[1], Phase(1));
        break;
    }
  }

  const std::vector<cd>& amplitudes() const { return amp_; }

 private:
  int n_;
  std::vector<cd> amp_;
};

std::size_t bits_index(const Bits& b) {
  std::size_t x = 0;
  for (bool v : b) x = (x << 1) | (v ? 1 : 0);
  return x;
}

}  // namespace

std::complex<double> amplitude(const GateList& g, const Bits& in_bits, const Bits& out_bits) {
  g.validate();
  if (g.qubits > kMaxStatevectorQubits) throw LimitError("statevector: too many qubits");
  if (in_bits.size() != static_cast<std::size_t>(g.qubits) ||
      out_bits.size() != static_cast<std::size_t>(g.qubits)) {
    throw InputError("statevector: bitstring length does not match qubit count");
  }
  Statevector sv(g.qubits, bits_index(in_bits));
  for (const Gate& x : g.gates) sv.apply(x);
  return sv.amplitudes()[bits_index(out_bits)];
}

DenseMap circuit_matrix(const GateList& g) {
  g.validate();
  if (g.qubits > 12) throw LimitError("circuit_matrix: too many qubits");
  DenseMap m;
  m.outputs = g.qubits;
  m.inputs = g.qubits;
  m.data.assign(m.rows() * m.cols(), cd{});
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Statevector sv(g.qubits, c);
    for (const Gate& x : g.gates) sv.apply(x);
    for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, c) = sv.amplitudes()[r];
  }
  return m;
}

double max_abs_diff(const DenseMap& a, const DenseMap& b) {
  if (a.inputs != b.inputs || a.outputs != b.outputs) return std::numeric_limits<double>::infinity();
  double m = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i) m = std::max(m, std::abs(a.data[i] - b.data[i]));
  return m;
}

}  // namespace zxcut
