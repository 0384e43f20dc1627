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

#include "sasaki5/rational.hpp"
#include "sasaki5/weight_system.hpp"

namespace sasaki5 {

/// Basic Hodge numbers of the leaf space of a 5-dimensional Sasakian
/// manifold (complex dimension n = 2): irregularity q = h^{0,1}_B, geometric
/// genus p_g = h^{0,2}_B, and h^{1,1}_B.
///
/// The formula functions below accept any triple; `make_hodge_data` enforces
/// the geometric constraints (nonnegative, h11 >= 1).
struct BasicHodgeData {
  std::int64_t q = 0;
  std::int64_t p_g = 0;
  std::int64_t h11 = 1;
};

/// Throws DomainError unless q, p_g >= 0 and h11 >= 1.
BasicHodgeData make_hodge_data(std::int64_t q, std::int64_t p_g, std::int64_t h11);

/// Basic Euler characteristic 2 + 2 p_g - 4 q + h11.
std::int64_t chi_b(const BasicHodgeData& h);

/// Basic signature 2 + 2 p_g - h11.
std::int64_t tau_b(const BasicHodgeData& h);

/// Holomorphic Euler characteristic 1 - q + p_g. Throws InvariantViolation if
/// chi_b + tau_b != 4 chi_hol.
std::int64_t chi_hol(const BasicHodgeData& h);

/// Arithmetic genus chi_hol - 1.
std::int64_t p_a(const BasicHodgeData& h);

/// Consequences of b_1(M) = 0 for the leaf space F of a positive
/// quasi-regular structure on M.
struct LeafSpaceBounds {
  std::int64_t b2_F;         // 1 + b2(M)
  std::int64_t chi_B;        // 3 + b2(M)
  std::int64_t chi_hol_min;  // always 1
  friend bool operator==(const LeafSpaceBounds&, const LeafSpaceBounds&) = default;
};

LeafSpaceBounds leaf_space_bounds(std::int64_t b2_M);

/// b2(M) >= 2 p_g, required of any positive structure.
bool genus_bound_holds(std::int64_t b2_M, std::int64_t p_g);

/// d (|w| - d)^2 / (w0 w1 w2 w3).
Rational c1_squared(const WeightSystem& ws);

/// Rank of degree-2 basic cohomology: 1 + b2 of the link.
Integer picard_number(const Integer& b2_link);

}  // namespace sasaki5
