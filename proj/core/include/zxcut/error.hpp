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

#include <stdexcept>
#include <string>

namespace zxcut {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad files, out-of-range qubits, violated invariants on load.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A rule or operation was asked to act on something that does not match its pattern.
class PatternError : public Error {
 public:
  using Error::Error;
};

/// A configured size limit was exceeded.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// A term budget was exhausted.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace zxcut
