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

#include <string>
#include <string_view>
#include <variant>

#include "sasaki5/errors.hpp"
#include "sasaki5/milnor_orlik.hpp"
#include "sasaki5/rational.hpp"

namespace sasaki5 {

// Diffeomorphism types of simply connected spin 5-manifolds reachable from
// link invariants. Torsion summands are never guessed.

struct Sphere5 {
  friend bool operator==(const Sphere5&, const Sphere5&) = default;
};

/// k # (S^2 x S^3), k >= 1.
struct ConnectedSum {
  Integer k;
  friend bool operator==(const ConnectedSum&, const ConnectedSum&) = default;
};

/// H_2 has rank b2 but the torsion criterion was inconclusive.
struct TorsionUndetermined {
  Integer b2;
  friend bool operator==(const TorsionUndetermined&, const TorsionUndetermined&) = default;
};

using DiffeoType = std::variant<Sphere5, ConnectedSum, TorsionUndetermined>;

class ClassificationPreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Throws ClassificationPreconditionError when spin is not implied.
DiffeoType classify(const LinkInvariants& inv);

/// "S^5" | "<k>#(S2xS3)" | "b2=<k>,torsion=?".
std::string label(const DiffeoType& type);

/// Inverse of `label`. Throws DomainError on anything else.
DiffeoType parse_label(std::string_view text);

}  // namespace sasaki5
