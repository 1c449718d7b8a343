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
#include <cstddef>
#include <vector>

#include "zxcut/circuit.hpp"
#include "zxcut/diagram.hpp"

namespace zxcut {

/// 2^outputs x 2^inputs matrix, row-major; qubit 0 is the most significant bit.
struct DenseMap {
  int outputs = 0;
  int inputs = 0;
  std::vector<std::complex<double>> data;

  std::size_t rows() const { return std::size_t{1} << outputs; }
  std::size_t cols() const { return std::size_t{1} << inputs; }
  std::complex<double>& at(std::size_t r, std::size_t c) { return data[r * cols() + c]; }
  std::complex<double> at(std::size_t r, std::size_t c) const { return data[r * cols() + c]; }
};

struct OracleLimits {
  std::size_t max_boundaries = 12;
  /// Largest intermediate tensor rank allowed during contraction.
  std::size_t max_rank = 22;
};

/// Dense contraction of the diagram's tensor network times its scalar.
DenseMap evaluate(const Diagram& d, const OracleLimits& limits = {});
/// Value of a scalar diagram.
std::complex<double> evaluate_scalar(const Diagram& d, const OracleLimits& limits = {});

/// Statevector simulation, independent of the diagram path.
std::complex<double> amplitude(const GateList& g, const Bits& in_bits, const Bits& out_bits);
/// Full unitary by statevector simulation of every basis input.
DenseMap circuit_matrix(const GateList& g);

double max_abs_diff(const DenseMap& a, const DenseMap& b);

}  // namespace zxcut
