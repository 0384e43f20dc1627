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

#include <map>
#include <string>

#include "sasaki5/divisor.hpp"
#include "sasaki5/rational.hpp"

namespace sasaki5 {

/// Brute-force model of a divisor: roots of unity keyed by rotation number
/// q in [0, 1) (the root exp(2*pi*i*q)), each with a rational multiplicity.
///
/// Independent of the gcd/lcm product rule in DivisorElement; it exists to
/// check that rule. Cost is quadratic in the number of roots, so keep indices
/// small.
class RootMultiset {
 public:
  using Entries = std::map<Rational, Rational>;

  RootMultiset() = default;

  /// Keys are reduced mod 1; zero multiplicities are dropped.
  explicit RootMultiset(const Entries& entries);

  const Entries& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  void add(const Rational& rotation, const Rational& multiplicity);

  friend bool operator==(const RootMultiset&, const RootMultiset&) = default;

 private:
  Entries entries_;
};

/// All n-th roots of unity, once each.
RootMultiset lambda_multiset(Index n);

RootMultiset to_multiset(const DivisorElement& d);

/// Group-ring product: rotation numbers add mod 1, multiplicities multiply.
RootMultiset convolve(const RootMultiset& a, const RootMultiset& b);

/// Multiplicity of the root 1.
Rational mult_at_zero(const RootMultiset& m);

/// Debug form "q:mult" pairs in ascending q, space separated.
std::string to_string(const RootMultiset& m);

}  // namespace sasaki5
