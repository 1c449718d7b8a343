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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zxcut {

/// An angle n*pi/4, reduced mod 2*pi.
class Phase {
 public:
  constexpr Phase() = default;
  constexpr explicit Phase(int numerator) : num_(static_cast<std::uint8_t>(((numerator % 8) + 8) % 8)) {}

  static constexpr Phase zero() { return Phase(0); }
  static constexpr Phase pi() { return Phase(4); }

  constexpr int numerator() const { return num_; }
  constexpr bool is_zero() const { return num_ == 0; }
  constexpr bool is_clifford() const { return num_ % 2 == 0; }
  constexpr bool is_t_like() const { return num_ % 2 == 1; }
  constexpr bool is_pauli() const { return num_ % 4 == 0; }
  /// +-pi/2.
  constexpr bool is_proper_clifford() const { return num_ % 4 == 2; }

  double radians() const;
  std::string to_string() const;

  constexpr Phase operator+(Phase o) const { return Phase(num_ + o.num_); }
  constexpr Phase operator-(Phase o) const { return Phase(num_ - o.num_); }
  constexpr Phase operator-() const { return Phase(-num_); }
  constexpr Phase& operator+=(Phase o) { return *this = *this + o; }
  constexpr Phase& operator-=(Phase o) { return *this = *this - o; }
  friend constexpr bool operator==(Phase, Phase) = default;
  friend constexpr auto operator<=>(Phase, Phase) = default;

 private:
  std::uint8_t num_ = 0;
};

using ParamId = int;

/// Values of boolean parameters.
using Assignment = std::map<ParamId, bool>;

/// XOR of a set of boolean parameters; stored sorted, duplicates cancel.
class Parity {
 public:
  Parity() = default;
  explicit Parity(ParamId p) : ids_{p} {}
  static Parity of(std::vector<ParamId> ids);

  bool empty() const { return ids_.empty(); }
  std::size_t size() const { return ids_.size(); }
  bool contains(ParamId p) const;
  const std::vector<ParamId>& ids() const { return ids_; }

  void toggle(ParamId p);
  void clear() { ids_.clear(); }
  Parity& operator^=(const Parity& o);
  friend Parity operator^(Parity a, const Parity& b) { return a ^= b; }

  /// Throws InputError if a parameter is unassigned.
  bool evaluate(const Assignment& a) const;

  /// Replaces p by (expr XOR constant). Returns the constant bit that now has
  /// to be XORed onto the parity (false when p was absent).
  bool substitute(ParamId p, const Parity& expr, bool constant);

  std::string to_string() const;

  friend bool operator==(const Parity&, const Parity&) = default;
  friend auto operator<=>(const Parity&, const Parity&) = default;

 private:
  std::vector<ParamId> ids_;
};

/// (-1)^(XOR negate) * base + pi * (XOR parity).
///
/// A negate set only ever accompanies a T-like base; on even bases it is folded
/// into the parity. An opaque phase keeps its base only as a representative of
/// its class mod pi/2 and cannot be evaluated.
struct ParamPhase {
  Phase base;
  Parity parity;
  Parity negate;
  bool opaque = false;

  ParamPhase() = default;
  ParamPhase(Phase b) : base(b) {}  // NOLINT: implicit by design of the arithmetic
  ParamPhase(Phase b, Parity p) : base(b), parity(std::move(p)) { normalize(); }

  static ParamPhase param_pi(ParamId p) { return ParamPhase(Phase::zero(), Parity(p)); }

  bool is_concrete() const { return !opaque && parity.empty() && negate.empty(); }
  /// Throws PatternError unless concrete.
  Phase concrete() const;
  bool is_t_like() const { return base.is_t_like(); }
  /// Value is 0 or pi under every assignment.
  bool is_pauli_valued() const { return !opaque && negate.empty() && base.is_pauli(); }
  bool is_zero() const { return is_concrete() && base.is_zero(); }

  Phase evaluate(const Assignment& a) const;

  /// Multiplies the angle by (-1)^(cond XOR constant).
  void negate_by(const Parity& cond, bool constant);
  void negate_all() { negate_by(Parity{}, true); }
  void substitute(ParamId p, const Parity& expr, bool constant);
  void make_opaque();
  void normalize();

  std::string to_string() const;

  friend bool operator==(const ParamPhase&, const ParamPhase&) = default;
};

/// Exact sum when representable; nullopt otherwise.
std::optional<ParamPhase> add_exact(const ParamPhase& a, const ParamPhase& b);
/// Exact sum when representable, otherwise an opaque phase of the right class.
ParamPhase add_lossy(const ParamPhase& a, const ParamPhase& b);

}  // namespace zxcut
