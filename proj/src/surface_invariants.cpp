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

#include "sasaki5/surface_invariants.hpp"

#include "sasaki5/errors.hpp"

namespace sasaki5 {

BasicHodgeData make_hodge_data(std::int64_t q, std::int64_t p_g, std::int64_t h11) {
  if (q < 0) throw DomainError("q must be nonnegative, got " + std::to_string(q));
  if (p_g < 0) throw DomainError("p_g must be nonnegative, got " + std::to_string(p_g));
  if (h11 < 1) throw DomainError("h11 must be at least 1, got " + std::to_string(h11));
  return {q, p_g, h11};
}

std::int64_t chi_b(const BasicHodgeData& h) { return 2 + 2 * h.p_g - 4 * h.q + h.h11; }

std::int64_t tau_b(const BasicHodgeData& h) { return 2 + 2 * h.p_g - h.h11; }

std::int64_t chi_hol(const BasicHodgeData& h) {
  const std::int64_t value = 1 - h.q + h.p_g;
  if (chi_b(h) + tau_b(h) != 4 * value) {
    throw InvariantViolation("chi_B + tau_B != 4 chi_hol");
  }
  return value;
}

std::int64_t p_a(const BasicHodgeData& h) { return chi_hol(h) - 1; }

LeafSpaceBounds leaf_space_bounds(std::int64_t b2_M) {
  if (b2_M < 0) throw DomainError("b2 must be nonnegative, got " + std::to_string(b2_M));
  return {1 + b2_M, 3 + b2_M, 1};
}

bool genus_bound_holds(std::int64_t b2_M, std::int64_t p_g) { return b2_M >= 2 * p_g; }

Rational c1_squared(const WeightSystem& ws) {
  Integer denom = 1;
  for (const auto w : ws.weights()) denom *= w;
  const Integer excess = ws.weight_sum() - ws.degree();
  return Rational(Integer(ws.degree()) * excess * excess, denom);
}

Integer picard_number(const Integer& b2_link) {
  if (b2_link < 0) throw DomainError("b2 must be nonnegative, got " + to_string(b2_link));
  return b2_link + 1;
}

}  // namespace sasaki5
