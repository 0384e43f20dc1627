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

#include "sasaki5/divisor.hpp"
#include "sasaki5/rational.hpp"
#include "sasaki5/weight_system.hpp"

namespace sasaki5 {

enum class TorsionFree { kYes, kUnknown };
enum class Spin { kImplied, kNotImplied };

std::string_view to_string(TorsionFree t);
std::string_view to_string(Spin s);

/// Invariants of the 5-dimensional link L_f = {f = 0} intersected with S^7.
struct LinkInvariants {
  WeightSystem system;
  DivisorElement divisor;  // div of the monodromy characteristic polynomial
  Integer b2;              // coeff_sum(divisor)
  Integer milnor_number;   // weighted_degree(divisor)
  TorsionFree torsion_free;
  Spin spin;

  friend bool operator==(const LinkInvariants&, const LinkInvariants&) = default;
};

/// prod_i (L_{u_i} / v_i - L_1) expanded left to right, without any
/// integrality check. Defined for every weight system.
DivisorElement milnor_orlik_product(const WeightSystem& ws);

/// milnor_orlik_product passed through assert_integral. A fractional
/// coefficient means `ws` cannot describe an isolated singularity.
DivisorElement char_poly_divisor(const WeightSystem& ws);

/// Second Betti number of the link: multiplicity of eigenvalue 1 in the
/// monodromy. Throws InvariantViolation if the value is negative.
Integer b2_of_link(const WeightSystem& ws);

/// prod_i (d - w_i) / w_i.
Rational milnor_formula(const WeightSystem& ws);

/// Milnor number, computed both from milnor_formula and as the root count of
/// char_poly_divisor. Throws InvariantViolation if the two disagree.
Integer milnor_number(const WeightSystem& ws);

/// kYes when every three weights are coprime (sufficient for H_2(L_f) to be
/// torsion free), kUnknown otherwise.
TorsionFree torsion_free_check(const WeightSystem& ws);

LinkInvariants link_invariants(const WeightSystem& ws);

}  // namespace sasaki5
