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

#include "zxcut/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zxcut/error.hpp"

namespace zxcut {

Scalar Scalar::zero() {
  Scalar s;
  s.set_zero();
  return s;
}

Scalar Scalar::from_complex(std::complex<double> c) {
  Scalar s;
  s.mul_complex(c);
  return s;
}

Scalar Scalar::from_parts(int sqrt2_power, Phase phase, std::complex<double> extra) {
  Scalar s;
  s.power_ = sqrt2_power;
  s.phase_ = phase;
  s.mul_complex(extra);
  return s;
}

void Scalar::set_zero() {
  zero_ = true;
  power_ = 0;
  phase_ = Phase();
  extra_ = 1.0;
  factors_.clear();
  opaque_ = false;
}

void Scalar::mul_complex(std::complex<double> c) {
  if (zero_) return;
  if (c == 0.0) {
    set_zero();
    return;
  }
  extra_ *= c;
}

void Scalar::mul_one_plus_phase(Phase a) {
  if (zero_) return;
  switch (a.numerator()) {
    case 0:
      power_ += 2;
      return;
    case 2:
      power_ += 1;
      phase_ += Phase(1);
      return;
    case 4:
      set_zero();
      return;
    case 6:
      power_ += 1;
      phase_ += Phase(7);
      return;
    default:
      extra_ *= 1.0 + std::polar(1.0, a.radians());
  }
}

void Scalar::add_factor(Phase coefficient, Parity parity) {
  if (coefficient.is_zero() || parity.empty()) return;
  for (auto it = factors_.begin(); it != factors_.end(); ++it) {
    if (it->parity == parity) {
      it->coefficient += coefficient;
      if (it->coefficient.is_zero()) factors_.erase(it);
      return;
    }
  }
  factors_.push_back({coefficient, std::move(parity)});
  std::sort(factors_.begin(), factors_.end(),
            [](const ParamFactor& x, const ParamFactor& y) { return x.parity < y.parity; });
}

void Scalar::mul_param_phase(Phase coefficient, const Parity& cond) {
  if (zero_) return;
  add_factor(coefficient, cond);
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (zero_) return *this;
  if (o.zero_) {
    set_zero();
    return *this;
  }
  power_ += o.power_;
  phase_ += o.phase_;
  extra_ *= o.extra_;
  for (const auto& f : o.factors_) add_factor(f.coefficient, f.parity);
  opaque_ = opaque_ || o.opaque_;
  return *this;
}

std::complex<double> Scalar::value() const {
  if (zero_) return 0.0;
  if (is_parametric()) throw PatternError("parametric scalar has no numeric value");
  double mag = (power_ % 2 == 0) ? std::ldexp(1.0, power_ / 2)
                                 : std::ldexp(std::sqrt(2.0), (power_ - 1) / 2);
  return mag * std::polar(1.0, phase_.radians()) * extra_;
}

Scalar Scalar::evaluated(const Assignment& a) const {
  if (opaque_) throw PatternError("opaque scalar cannot be evaluated");
  Scalar s = *this;
  s.factors_.clear();
  for (const auto& f : factors_) {
    if (f.parity.evaluate(a)) s.phase_ += f.coefficient;
  }
  return s;
}

void Scalar::substitute(ParamId p, const Parity& expr, bool constant) {
  if (zero_) return;
  std::vector<ParamFactor> old;
  old.swap(factors_);
  for (auto f : old) {
    if (f.parity.substitute(p, expr, constant)) {
      // [y ^ 1] = 1 - [y]
      phase_ += f.coefficient;
      f.coefficient = -f.coefficient;
    }
    add_factor(f.coefficient, std::move(f.parity));
  }
}

std::string Scalar::to_string() const {
  if (zero_) return "0";
  std::ostringstream os;
  os << "sqrt2^" << power_ << " * e^(i*" << phase_.to_string() << ")";
  if (extra_ != std::complex<double>(1.0, 0.0)) os << " * (" << extra_.real() << "," << extra_.imag() << ")";
  for (const auto& f : factors_) {
    os << " * e^(i*" << f.coefficient.to_string() << "*[" << f.parity.to_string() << "])";
  }
  if (opaque_) os << " * ?";
  return os.str();
}

}  // namespace zxcut
