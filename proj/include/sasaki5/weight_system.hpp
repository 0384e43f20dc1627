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

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace sasaki5 {

/// Weights (w0, w1, w2, w3) and degree d of a weighted homogeneous polynomial
/// in four variables. Weights keep the order they were given in.
class WeightSystem {
 public:
  using Weights = std::array<std::int64_t, 4>;

  /// Throws DomainError unless every weight and the degree are >= 1.
  WeightSystem(const Weights& weights, std::int64_t degree);

  const Weights& weights() const noexcept { return weights_; }
  std::int64_t degree() const noexcept { return degree_; }
  std::int64_t weight_sum() const noexcept;

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;
  friend auto operator<=>(const WeightSystem&, const WeightSystem&) = default;

 private:
  Weights weights_;
  std::int64_t degree_;
};

/// d / w_i = u / v in lowest terms.
struct ReducedWeight {
  std::int64_t u;
  std::int64_t v;
  friend bool operator==(const ReducedWeight&, const ReducedWeight&) = default;
};

using ReducedWeights = std::array<ReducedWeight, 4>;

/// How isolatedness of the singularity at the origin is justified.
enum class Isolatedness {
  kBrieskornPham,  // every w_i divides d
  kPaperFamily,    // (1,1,1,k; k+1), generic g_(k+1) + g_(1) z3
  kAssumed,
};

/// Parses "w0,w1,w2,w3:d". Throws DomainError on malformed text, entries
/// that are not positive, or integer overflow.
WeightSystem parse_weight_system(std::string_view text);

/// The inverse of parse_weight_system.
std::string to_string(const WeightSystem& ws);

ReducedWeights reduced_weights(const WeightSystem& ws);

/// |w| - d. Positive means Fano.
std::int64_t fano_index(const WeightSystem& ws);

bool is_brieskorn_pham_compatible(const WeightSystem& ws);

/// (1,1,1,k; k+1) for some k >= 1, up to permutation of the weights.
bool is_paper_family(const WeightSystem& ws);

Isolatedness isolatedness(const WeightSystem& ws);

std::string_view to_string(Isolatedness iso);

/// The family member (1,1,1,k; k+1). Throws DomainError for k < 1.
WeightSystem paper_family_system(std::int64_t k);

}  // namespace sasaki5
