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

#include "sasaki5/divisor.hpp"

#include <limits>
#include <numeric>

#include "sasaki5/errors.hpp"

namespace sasaki5 {

namespace {

Index checked_lcm(Index a, Index b) {
  const Index g = std::gcd(a, b);
  const Index q = a / g;
  if (q > std::numeric_limits<Index>::max() / b) {
    throw DomainError("divisor index overflow: lcm(" + std::to_string(a) + ", " +
                      std::to_string(b) + ")");
  }
  return q * b;
}

std::string term_string(Index n, const Rational& c) {
  return to_string(c) + "*L" + std::to_string(n);
}

}  // namespace

DivisorElement::DivisorElement(const Terms& terms) {
  for (const auto& [n, c] : terms) {
    if (n == 0) throw DomainError("divisor index must be positive");
    add_term(n, c);
  }
}

Rational DivisorElement::coeff(Index n) const {
  const auto it = terms_.find(n);
  return it == terms_.end() ? Rational(0) : it->second;
}

void DivisorElement::add_term(Index n, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(n, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

DivisorElement& DivisorElement::operator+=(const DivisorElement& rhs) {
  for (const auto& [n, c] : rhs.terms_) add_term(n, c);
  return *this;
}

DivisorElement& DivisorElement::operator-=(const DivisorElement& rhs) {
  for (const auto& [n, c] : rhs.terms_) add_term(n, -c);
  return *this;
}

DivisorElement& DivisorElement::operator*=(const DivisorElement& rhs) {
  DivisorElement out;
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : rhs.terms_) {
      out.add_term(checked_lcm(a, b), ca * cb * Rational(std::gcd(a, b)));
    }
  }
  *this = std::move(out);
  return *this;
}

DivisorElement& DivisorElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [n, a] : terms_) a *= c;
  return *this;
}

DivisorElement operator+(DivisorElement lhs, const DivisorElement& rhs) { return lhs += rhs; }
DivisorElement operator-(DivisorElement lhs, const DivisorElement& rhs) { return lhs -= rhs; }
DivisorElement operator-(DivisorElement d) { return d *= Rational(-1); }

DivisorElement operator*(const DivisorElement& lhs, const DivisorElement& rhs) {
  DivisorElement out = lhs;
  return out *= rhs;
}

DivisorElement operator*(const Rational& c, DivisorElement d) { return d *= c; }

DivisorElement lambda(Index n) {
  if (n == 0) throw DomainError("lambda: index must be positive, got 0");
  return DivisorElement({{n, Rational(1)}});
}

DivisorElement lambda(long long n) {
  if (n <= 0) throw DomainError("lambda: index must be positive, got " + std::to_string(n));
  return lambda(static_cast<Index>(n));
}

DivisorElement lambda(int n) { return lambda(static_cast<long long>(n)); }

Rational coeff_sum(const DivisorElement& d) {
  Rational s = 0;
  for (const auto& [n, c] : d.terms()) s += c;
  return s;
}

Rational weighted_degree(const DivisorElement& d) {
  Rational s = 0;
  for (const auto& [n, c] : d.terms()) s += c * Rational(Integer(n));
  return s;
}

const DivisorElement& assert_integral(const DivisorElement& d) {
  for (const auto& [n, c] : d.terms()) {
    if (!is_integer(c)) {
      const std::string term = term_string(n, c);
      throw IntegralityViolation(term, "non-integral divisor coefficient: " + term);
    }
  }
  return d;
}

std::string to_string(const DivisorElement& d) {
  if (d.is_zero()) return "0";
  std::string out;
  for (const auto& [n, c] : d.terms()) {
    if (!out.empty()) out += " + ";
    out += term_string(n, c);
  }
  return out;
}

}  // namespace sasaki5
