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

#include "sasaki5/family.hpp"

#include <algorithm>

#include <doctest.h>

#include "sasaki5/errors.hpp"

namespace sasaki5 {
namespace {

// Number of monomials of degree `deg` in three variables, by enumeration.
std::int64_t monomials3(std::int64_t deg) {
  std::int64_t count = 0;
  for (std::int64_t a = 0; a <= deg; ++a) {
    for (std::int64_t b = 0; a + b <= deg; ++b) ++count;
  }
  return count;
}

TEST_CASE("paper_family") {
  const FamilyReport k7 = paper_family(7);
  CHECK(k7.system == WeightSystem({1, 1, 1, 7}, 8));
  CHECK(k7.invariants.b2 == 7);
  CHECK(label(k7.diffeo) == "7#(S2xS3)");
  CHECK(k7.c1_squared == Rational(32, 7));
  CHECK(k7.picard == 8);
  CHECK(k7.moduli_real_dim == 4);

  const FamilyReport k2 = paper_family(2);
  CHECK(k2.invariants.b2 == 2);
  CHECK(k2.invariants.divisor == lambda(3) + lambda(1));
  CHECK(k2.c1_squared == 6);
  CHECK(k2.moduli_real_dim == 0);

  const FamilyReport k1 = paper_family(1);
  CHECK(k1.system == WeightSystem({1, 1, 1, 1}, 2));
  CHECK(k1.invariants.b2 == 1);
  CHECK(label(k1.diffeo) == "1#(S2xS3)");

  CHECK_THROWS_AS(paper_family(0), DomainError);
}

TEST_CASE("picard number grows without bound along the family") {
  Integer previous = 0;
  for (std::int64_t k = 1; k <= 50; ++k) {
    const FamilyReport r = paper_family(k);
    CHECK(r.invariants.b2 == k);
    CHECK(r.picard == k + 1);
    CHECK(r.picard > previous);
    previous = r.picard;
  }
}

TEST_CASE("moduli count") {
  CHECK(moduli_real_dimension(6) == 2);
  CHECK(moduli_real_dimension(5) == 0);
  CHECK(moduli_real_dimension(10) == 10);
  for (std::int64_t k = 1; k < 5; ++k) CHECK(moduli_real_dimension(k) == 0);
  for (std::int64_t k = 7; k <= 60; ++k) {
    CHECK(moduli_real_dimension(k) - moduli_real_dimension(k - 1) == 2);
  }
  CHECK_THROWS_AS(moduli_real_dimension(0), DomainError);
}

TEST_CASE("moduli count agrees with monomial enumeration") {
  for (std::int64_t k = 1; k <= 40; ++k) {
    const ModuliCount c = moduli_count(k);
    CHECK(c.coefficients == monomials3(k + 1) + monomials3(1));
    CHECK(c.group_dim == 9 + 1 + monomials3(k));
    CHECK(c.complex_dim == k - 5);
  }
}

TEST_CASE("enumerate_index contains the family and respects the index") {
  const auto rows = enumerate_index(2, 8, 9, 1);
  for (std::int64_t k = 1; k <= 8; ++k) {
    const WeightSystem ws = paper_family_system(k);
    const auto it = std::find_if(rows.begin(), rows.end(),
                                 [&](const EnumerationRow& r) { return r.system == ws; });
    REQUIRE(it != rows.end());
    REQUIRE(it->invariants.has_value());
    CHECK(it->invariants->b2 == k);
    CHECK(*it->picard == k + 1);
  }
  for (const auto& row : rows) {
    CHECK(fano_index(row.system) == 2);
    CHECK(row.index == 2);
    CHECK(std::is_sorted(row.system.weights().begin(), row.system.weights().end()));
    CHECK(row.system.degree() <= 9);
    CHECK(row.invariants.has_value() ==
          (row.status != RowStatus::kNonIntegral && row.status != RowStatus::kNonIsolated));
  }
  CHECK(std::is_sorted(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.system < b.system;
  }));
}

TEST_CASE("enumerate_index bound filtering") {
  CHECK(enumerate_index(2, 1, 1).empty());
  const auto rows = enumerate_index(2, 1, 2);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].system == WeightSystem({1, 1, 1, 1}, 2));
  CHECK_THROWS_AS(enumerate_index(0, 3, 3), DomainError);
}

TEST_CASE("enumerate_index flags non-isolated rows") {
  // (1,1,1,8; 3) has index 8.
  const auto rows = enumerate_index(8, 8, 12, 2);
  const auto it = std::find_if(rows.begin(), rows.end(), [](const EnumerationRow& r) {
    return r.system == WeightSystem({1, 1, 1, 8}, 3);
  });
  REQUIRE(it != rows.end());
  CHECK(it->status == RowStatus::kNonIsolated);
  CHECK_FALSE(it->invariants.has_value());

  // All weights <= d, but div = 8 L15 - 13 L5 + L1 sums to -4.
  const auto rows2 = enumerate_index(2, 9, 20, 2);
  const auto neg = std::find_if(rows2.begin(), rows2.end(), [](const EnumerationRow& r) {
    return r.system == WeightSystem({3, 3, 3, 8}, 15);
  });
  REQUIRE(neg != rows2.end());
  CHECK(neg->status == RowStatus::kNonIsolated);
}

TEST_CASE("enumerate_index does not depend on the thread count") {
  const auto serial = enumerate_index(3, 9, 20, 1);
  for (unsigned threads : {2u, 3u, 8u, 0u}) {
    const auto parallel = enumerate_index(3, 9, 20, threads);
    REQUIRE(parallel.size() == serial.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(parallel[i].system == serial[i].system);
      CHECK(parallel[i].status == serial[i].status);
      CHECK(parallel[i].invariants == serial[i].invariants);
    }
  }
}

}  // namespace
}  // namespace sasaki5
