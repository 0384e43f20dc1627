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

#include "sasaki5/root_multiset.hpp"

#include "sasaki5/errors.hpp"

namespace sasaki5 {

namespace {

Rational mod_one(const Rational& q) {
  const Integer num = numerator(q);
  const Integer den = denominator(q);
  Integer r = num % den;
  if (r < 0) r += den;
  return Rational(r, den);
}

}  // namespace

RootMultiset::RootMultiset(const Entries& entries) {
  for (const auto& [q, m] : entries) add(q, m);
}

void RootMultiset::add(const Rational& rotation, const Rational& multiplicity) {
  if (multiplicity == 0) return;
  auto [it, inserted] = entries_.try_emplace(mod_one(rotation), multiplicity);
  if (!inserted) {
    it->second += multiplicity;
    if (it->second == 0) entries_.erase(it);
  }
}

RootMultiset lambda_multiset(Index n) {
  if (n == 0) throw DomainError("lambda_multiset: index must be positive, got 0");
  RootMultiset m;
  for (Index j = 0; j < n; ++j) m.add(Rational(Integer(j), Integer(n)), Rational(1));
  return m;
}

RootMultiset to_multiset(const DivisorElement& d) {
  RootMultiset out;
  for (const auto& [n, c] : d.terms()) {
    const RootMultiset roots = lambda_multiset(n);
    for (const auto& [q, m] : roots.entries()) out.add(q, c * m);
  }
  return out;
}

RootMultiset convolve(const RootMultiset& a, const RootMultiset& b) {
  RootMultiset out;
  for (const auto& [qa, ma] : a.entries()) {
    for (const auto& [qb, mb] : b.entries()) out.add(qa + qb, ma * mb);
  }
  return out;
}

Rational mult_at_zero(const RootMultiset& m) {
  const auto it = m.entries().find(Rational(0));
  return it == m.entries().end() ? Rational(0) : it->second;
}

std::string to_string(const RootMultiset& m) {
  std::string out;
  for (const auto& [q, mult] : m.entries()) {
    if (!out.empty()) out += ' ';
    out += to_string(q) + ":" + to_string(mult);
  }
  return out;
}

}  // namespace sasaki5
