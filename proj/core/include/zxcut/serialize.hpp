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

#include <string>
#include <string_view>

#include "zxcut/diagram.hpp"

namespace zxcut {

struct ParamGraph;
struct ProcedureReport;
struct TermSum;

/// JSON document; vertices sorted by id.
std::string serialize(const Diagram& d);
/// Throws InputError with the offending location, or on invariant violation.
Diagram deserialize(std::string_view text);

std::string serialize(const ParamGraph& pg);
ParamGraph deserialize_param_graph(std::string_view text);

std::string to_json(const ProcedureReport& r);
std::string to_json(const TermSum& t);

}  // namespace zxcut
