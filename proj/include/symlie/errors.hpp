// Copyright 2026 The symlie Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace symlie {

/// A triple, index or parameter violates a precondition tied to n.
class ConstraintError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands live on different qubit counts.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameter outside the mathematical domain of a formula (e.g. k > n).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operation called on an object that is not in the required state.
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Request exceeds the size this engine is willing to materialize.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cache or report file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numeric structure check failed; signals a bug upstream.
class StructureViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace symlie
