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

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "sasaki5/classify5.hpp"
#include "sasaki5/milnor_orlik.hpp"
#include "sasaki5/rational.hpp"
#include "sasaki5/weight_system.hpp"

namespace sasaki5 {

/// Everything computable about the link of the family member
/// f = g_(k+1)(z0,z1,z2) + g_(1)(z0,z1,z2) z3 of weights (1,1,1,k), degree k+1.
struct FamilyReport {
  std::int64_t k;
  WeightSystem system;
  LinkInvariants invariants;
  DiffeoType diffeo;
  Rational c1_squared;
  Integer picard;
  std::int64_t moduli_real_dim;
};

/// Throws DomainError for k < 1 and InvariantViolation if b2 != k or
/// c1^2 != 4 (1 + 1/k).
FamilyReport paper_family(std::int64_t k);

/// Parameter count behind the moduli of the family:
///   coefficients  N = C(k+3, 2) + 3      (g_(k+1) and g_(1))
///   group         G = 9 + 1 + C(k+2, 2)  (A in GL(3), lambda, phi_(k))
/// Projectivising both sides leaves complex dimension N - G = k - 5.
struct ModuliCount {
  std::int64_t coefficients;
  std::int64_t group_dim;
  std::int64_t complex_dim;
  std::int64_t real_dim;  // max(0, 2 * complex_dim)
};

ModuliCount moduli_count(std::int64_t k);

/// Real dimension of the family of inequivalent structures, clamped at 0.
std::int64_t moduli_real_dimension(std::int64_t k);

enum class RowStatus {
  kBrieskornPham,
  kPaperFamily,
  kAssumedIsolated,
  kNonIsolated,  // some w_i > d, or the formal b2 is negative
  kNonIntegral,  // Milnor-Orlik product has a fractional coefficient
};

std::string_view to_string(RowStatus s);

struct EnumerationRow {
  WeightSystem system;
  std::int64_t index;
  RowStatus status;
  Rational c1_squared;
  // Present only for kBrieskornPham, kPaperFamily and kAssumedIsolated rows.
  std::optional<LinkInvariants> invariants;
  std::optional<DiffeoType> diffeo;
  std::optional<Integer> picard;
};

/// All systems with non-decreasing weights <= max_weight, 1 <= d <= max_degree
/// and |w| - d = index, in lexicographic (weights, degree) order. Rows are
/// evaluated on `threads` workers (0 = hardware concurrency); the result is
/// the same for every thread count.
std::vector<EnumerationRow> enumerate_index(std::int64_t index, std::int64_t max_weight,
                                            std::int64_t max_degree, unsigned threads = 0);

}  // namespace sasaki5
