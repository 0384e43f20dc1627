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

#include "sasaki5/milnor_orlik.hpp"

#include <numeric>

#include "sasaki5/errors.hpp"

namespace sasaki5 {

namespace {

Integer as_integer(const Rational& r, const char* what) {
  if (!is_integer(r)) {
    throw InvariantViolation(std::string(what) + " is not an integer: " + to_string(r));
  }
  return numerator(r);
}

Integer checked_b2(const DivisorElement& divisor, const WeightSystem& ws) {
  const Integer b2 = as_integer(coeff_sum(divisor), "b2");
  if (b2 < 0) {
    throw InvariantViolation("negative b2 = " + to_string(b2) + " for " + to_string(ws));
  }
  return b2;
}

Integer checked_milnor(const DivisorElement& divisor, const WeightSystem& ws) {
  const Rational by_formula = milnor_formula(ws);
  const Rational by_roots = weighted_degree(divisor);
  if (by_formula != by_roots) {
    throw InvariantViolation("Milnor number mismatch for " + to_string(ws) + ": formula " +
                             to_string(by_formula) + ", root count " + to_string(by_roots));
  }
  return as_integer(by_roots, "Milnor number");
}

}  // namespace

std::string_view to_string(TorsionFree t) { return t == TorsionFree::kYes ? "yes" : "unknown"; }

std::string_view to_string(Spin s) { return s == Spin::kImplied ? "implied" : "not-implied"; }

DivisorElement milnor_orlik_product(const WeightSystem& ws) {
  DivisorElement product = lambda(Index{1});
  for (const auto& [u, v] : reduced_weights(ws)) {
    product *= scale(Rational(1, v), lambda(static_cast<Index>(u))) - lambda(Index{1});
  }
  return product;
}

DivisorElement char_poly_divisor(const WeightSystem& ws) {
  DivisorElement d = milnor_orlik_product(ws);
  assert_integral(d);
  return d;
}

Integer b2_of_link(const WeightSystem& ws) { return checked_b2(char_poly_divisor(ws), ws); }

Rational milnor_formula(const WeightSystem& ws) {
  Rational mu = 1;
  for (const auto w : ws.weights()) mu *= Rational(ws.degree() - w, w);
  return mu;
}

Integer milnor_number(const WeightSystem& ws) { return checked_milnor(char_poly_divisor(ws), ws); }

TorsionFree torsion_free_check(const WeightSystem& ws) {
  const auto& w = ws.weights();
  for (std::size_t skip = 0; skip < w.size(); ++skip) {
    std::int64_t g = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != skip) g = std::gcd(g, w[i]);
    }
    if (g != 1) return TorsionFree::kUnknown;
  }
  return TorsionFree::kYes;
}

LinkInvariants link_invariants(const WeightSystem& ws) {
  DivisorElement divisor = char_poly_divisor(ws);
  Integer b2 = checked_b2(divisor, ws);
  Integer mu = checked_milnor(divisor, ws);
  return LinkInvariants{
      .system = ws,
      .divisor = std::move(divisor),
      .b2 = std::move(b2),
      .milnor_number = std::move(mu),
      .torsion_free = torsion_free_check(ws),
      .spin = fano_index(ws) > 0 ? Spin::kImplied : Spin::kNotImplied,
  };
}

}  // namespace sasaki5
