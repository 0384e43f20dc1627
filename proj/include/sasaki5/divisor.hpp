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
#include <map>
#include <string>

#include "sasaki5/rational.hpp"

namespace sasaki5 {

using Index = std::uint64_t;

/// Element of the subring of Z[C*] spanned by the cyclotomic divisors
/// L_n = div(t^n - 1), with rational coefficients allowed.
///
/// Stored as a sparse map n -> a_n with every a_n nonzero, so equality is
/// structural. L_1 = <1> is the multiplicative identity and the empty map is
/// zero. Products follow L_a * L_b = gcd(a, b) * L_lcm(a, b).
class DivisorElement {
 public:
  using Terms = std::map<Index, Rational>;

  DivisorElement() = default;

  /// Builds from raw terms, dropping zero coefficients. Throws DomainError on
  /// index 0.
  explicit DivisorElement(const Terms& terms);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient of L_n (zero when absent).
  Rational coeff(Index n) const;

  DivisorElement& operator+=(const DivisorElement& rhs);
  DivisorElement& operator-=(const DivisorElement& rhs);
  DivisorElement& operator*=(const DivisorElement& rhs);
  DivisorElement& operator*=(const Rational& c);

  friend bool operator==(const DivisorElement&, const DivisorElement&) = default;

 private:
  void add_term(Index n, const Rational& c);

  Terms terms_;
};

DivisorElement operator+(DivisorElement lhs, const DivisorElement& rhs);
DivisorElement operator-(DivisorElement lhs, const DivisorElement& rhs);
DivisorElement operator-(DivisorElement d);
DivisorElement operator*(const DivisorElement& lhs, const DivisorElement& rhs);
DivisorElement operator*(const Rational& c, DivisorElement d);

/// The single term {n: 1}. Throws DomainError for n == 0.
DivisorElement lambda(Index n);
/// Signed overload; rejects n <= 0.
DivisorElement lambda(long long n);
DivisorElement lambda(int n);

inline DivisorElement add(const DivisorElement& a, const DivisorElement& b) { return a + b; }
inline DivisorElement mul(const DivisorElement& a, const DivisorElement& b) { return a * b; }
inline DivisorElement scale(const Rational& c, const DivisorElement& d) { return c * d; }

/// Sum of all coefficients, including the L_1 term.
Rational coeff_sum(const DivisorElement& d);

/// Total root count sum_n a_n * n.
Rational weighted_degree(const DivisorElement& d);

/// Returns `d` if every coefficient is an integer, otherwise throws
/// IntegralityViolation naming the first fractional term.
const DivisorElement& assert_integral(const DivisorElement& d);

/// "a1*L1 + a2*L2 + ..." with ascending indices; "0" for the zero element.
std::string to_string(const DivisorElement& d);

}  // namespace sasaki5
