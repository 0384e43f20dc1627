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
#include <random>

#include "sasaki5/divisor.hpp"
#include "sasaki5/weight_system.hpp"

namespace sasaki5::testing {

using Rng = std::mt19937_64;

/// Up to `max_terms` terms with indices in [1, max_index] and integer
/// coefficients in [-max_coeff, max_coeff].
inline DivisorElement random_divisor(Rng& rng, Index max_index = 12, int max_coeff = 3,
                                     int max_terms = 4) {
  std::uniform_int_distribution<Index> index(1, max_index);
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  std::uniform_int_distribution<int> count(0, max_terms);
  DivisorElement d;
  for (int t = count(rng); t > 0; --t) d += scale(Rational(coeff(rng)), lambda(index(rng)));
  return d;
}

/// Like random_divisor but with coefficients p/q, q in [1, 4].
inline DivisorElement random_rational_divisor(Rng& rng) {
  std::uniform_int_distribution<Index> index(1, 12);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> count(0, 4);
  DivisorElement d;
  for (int t = count(rng); t > 0; --t) d += scale(Rational(num(rng), den(rng)), lambda(index(rng)));
  return d;
}

inline WeightSystem random_weight_system(Rng& rng, std::int64_t max_weight = 6,
                                         std::int64_t max_degree = 12) {
  std::uniform_int_distribution<std::int64_t> w(1, max_weight);
  std::uniform_int_distribution<std::int64_t> d(1, max_degree);
  return WeightSystem({w(rng), w(rng), w(rng), w(rng)}, d(rng));
}

}  // namespace sasaki5::testing
