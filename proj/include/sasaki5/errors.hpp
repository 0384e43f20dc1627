// Copyright 2026 The sasaki5 Authors
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

namespace sasaki5 {

/// Input that is well-formed but outside the mathematical domain of an
/// operation (bad weight system, invalid index, unmet precondition).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A divisor that must be integral has a fractional coefficient.
class IntegralityViolation : public DomainError {
 public:
  IntegralityViolation(std::string term, const std::string& what)
      : DomainError(what), term_(std::move(term)) {}

  /// Offending term rendered as "c*Ln".
  const std::string& term() const noexcept { return term_; }

 private:
  std::string term_;
};

/// Two independent computations disagreed, or a derived value left its
/// admissible range. Always a bug, never a user error.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sasaki5
