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

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zxcut/diagram.hpp"

namespace zxcut {

/// Term counts grow as 2^(alpha*t); exact integers keep blind estimates honest.
using Count = boost::multiprecision::cpp_int;

enum class CountMode { Exact, Blind };

struct TermSum {
  CountMode mode = CountMode::Exact;
  Count count = 0;
  /// Exact mode only.
  std::complex<double> sum{0.0, 0.0};
  /// Exact mode with keep_terms only.
  std::vector<std::complex<double>> values;
  std::size_t t_initial = 0;
  std::vector<std::string> log;
};

/// Replaces the six given T-like Z-spiders by the seven Clifford terms of the
/// BSS magic-state decomposition. Throws PatternError on a bad vertex set.
std::vector<Diagram> bss_decompose(const Diagram& d, const std::vector<VertexId>& six);

/// Cuts every T-like Z-spider: 2^t terms, none T-like. Throws PatternError
/// outside 0 <= t <= 5.
std::vector<Diagram> fallback_decompose(const Diagram& d);

struct DriverOptions {
  /// BudgetError once more terms than this would be produced.
  std::optional<Count> budget = Count(1) << 20;
  bool keep_terms = false;
};

/// full_simplify, then BSS on the lowest six T-spiders while t >= 6 and
/// single-T cuts below that, simplifying every intermediate term.
TermSum decompose_bss_driver(const Diagram& d, const DriverOptions& opts = {});

/// 7^(t/6) * 2^(t mod 6).
Count blind_estimate_bss(std::size_t t);
TermSum blind_bss(std::size_t t_initial);

double log2_count(const Count& c);
/// log2(terms) / t_initial; nullopt when t_initial is 0.
std::optional<double> effective_alpha(const Count& terms, std::size_t t_initial);

}  // namespace zxcut
