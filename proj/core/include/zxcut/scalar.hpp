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

#include <complex>
#include <string>
#include <vector>

#include "zxcut/phase.hpp"

namespace zxcut {

/// e^(i * coefficient * [XOR parity]).
struct ParamFactor {
  Phase coefficient;
  Parity parity;
  friend bool operator==(const ParamFactor&, const ParamFactor&) = default;
};

/// sqrt(2)^power * e^(i*phase) * extra, or exactly zero.
///
/// Parametric factors appear only on diagrams carrying boolean parameters. An
/// opaque scalar has lost track of some factor and can only be counted, never
/// evaluated.
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero();
  static Scalar from_complex(std::complex<double> c);
  static Scalar from_parts(int sqrt2_power, Phase phase, std::complex<double> extra = 1.0);

  bool is_zero() const { return zero_; }
  int sqrt2_power() const { return power_; }
  Phase phase() const { return phase_; }
  std::complex<double> extra() const { return extra_; }
  const std::vector<ParamFactor>& factors() const { return factors_; }
  bool is_opaque() const { return opaque_; }
  bool is_parametric() const { return opaque_ || !factors_.empty(); }

  void set_zero();
  void mul_sqrt2_pow(int k) { power_ += k; }
  void add_phase(Phase p) { phase_ += p; }
  void mul_complex(std::complex<double> c);
  /// Multiplies by 1 + e^(i*a), exactly when a is Clifford.
  void mul_one_plus_phase(Phase a);
  /// Multiplies by e^(i * coefficient * [XOR cond]).
  void mul_param_phase(Phase coefficient, const Parity& cond);
  void mark_opaque() { opaque_ = true; }

  Scalar& operator*=(const Scalar& o);
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

  /// Throws PatternError if parametric.
  std::complex<double> value() const;
  Scalar evaluated(const Assignment& a) const;
  void substitute(ParamId p, const Parity& expr, bool constant);

  std::string to_string() const;

  friend bool operator==(const Scalar&, const Scalar&) = default;

 private:
  void add_factor(Phase coefficient, Parity parity);

  bool zero_ = false;
  int power_ = 0;
  Phase phase_;
  std::complex<double> extra_{1.0, 0.0};
  std::vector<ParamFactor> factors_;
  bool opaque_ = false;
};

}  // namespace zxcut
