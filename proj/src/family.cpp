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
#include <atomic>
#include <thread>

#include "sasaki5/errors.hpp"
#include "sasaki5/surface_invariants.hpp"

namespace sasaki5 {

namespace {

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

EnumerationRow evaluate_row(const WeightSystem& ws, std::int64_t index) {
  EnumerationRow row{ws, index, RowStatus::kAssumedIsolated, c1_squared(ws), {}, {}, {}};
  const auto& w = ws.weights();
  if (std::any_of(w.begin(), w.end(), [&](std::int64_t x) { return x > ws.degree(); })) {
    row.status = RowStatus::kNonIsolated;
    return row;
  }
  DivisorElement divisor;
  try {
    divisor = char_poly_divisor(ws);
  } catch (const IntegralityViolation&) {
    row.status = RowStatus::kNonIntegral;
    return row;
  }
  // The link of an isolated singularity has b2 >= 0.
  if (coeff_sum(divisor) < 0) {
    row.status = RowStatus::kNonIsolated;
    return row;
  }
  row.invariants = link_invariants(ws);
  switch (isolatedness(ws)) {
    case Isolatedness::kBrieskornPham:
      row.status = RowStatus::kBrieskornPham;
      break;
    case Isolatedness::kPaperFamily:
      row.status = RowStatus::kPaperFamily;
      break;
    case Isolatedness::kAssumed:
      row.status = RowStatus::kAssumedIsolated;
      break;
  }
  row.picard = picard_number(row.invariants->b2);
  if (row.invariants->spin == Spin::kImplied) row.diffeo = classify(*row.invariants);
  return row;
}

std::vector<WeightSystem> candidates(std::int64_t index, std::int64_t max_weight,
                                     std::int64_t max_degree) {
  std::vector<WeightSystem> out;
  for (std::int64_t a = 1; a <= max_weight; ++a) {
    for (std::int64_t b = a; b <= max_weight; ++b) {
      for (std::int64_t c = b; c <= max_weight; ++c) {
        for (std::int64_t e = c; e <= max_weight; ++e) {
          const std::int64_t d = a + b + c + e - index;
          if (d >= 1 && d <= max_degree) out.emplace_back(WeightSystem::Weights{a, b, c, e}, d);
        }
      }
    }
  }
  return out;
}

}  // namespace

FamilyReport paper_family(std::int64_t k) {
  const WeightSystem ws = paper_family_system(k);
  LinkInvariants inv = link_invariants(ws);
  if (inv.b2 != k) {
    throw InvariantViolation("family k=" + std::to_string(k) + ": b2 = " + to_string(inv.b2));
  }
  Rational c1sq = c1_squared(ws);
  if (c1sq != 4 * (1 + Rational(1, k))) {
    throw InvariantViolation("family k=" + std::to_string(k) + ": c1^2 = " + to_string(c1sq));
  }
  DiffeoType diffeo = classify(inv);
  Integer picard = picard_number(inv.b2);
  return FamilyReport{k,         ws, std::move(inv), std::move(diffeo), std::move(c1sq),
                      std::move(picard), moduli_real_dimension(k)};
}

ModuliCount moduli_count(std::int64_t k) {
  if (k < 1) throw DomainError("family parameter k must be >= 1, got " + std::to_string(k));
  const std::int64_t coefficients = choose2(k + 3) + 3;
  const std::int64_t group_dim = 9 + 1 + choose2(k + 2);
  // Both the coefficient space and the group are projectivised.
  const std::int64_t complex_dim = (coefficients - 1) - (group_dim - 1);
  if (complex_dim != k - 5) {
    throw InvariantViolation("moduli count: N - G = " + std::to_string(complex_dim) +
                             ", expected " + std::to_string(k - 5));
  }
  return {coefficients, group_dim, complex_dim, std::max<std::int64_t>(0, 2 * complex_dim)};
}

std::int64_t moduli_real_dimension(std::int64_t k) { return moduli_count(k).real_dim; }

std::string_view to_string(RowStatus s) {
  switch (s) {
    case RowStatus::kBrieskornPham:
      return "brieskorn-pham";
    case RowStatus::kPaperFamily:
      return "paper-family";
    case RowStatus::kAssumedIsolated:
      return "assumed-isolated";
    case RowStatus::kNonIsolated:
      return "non-isolated";
    case RowStatus::kNonIntegral:
      return "non-integral";
  }
  return "assumed-isolated";
}

std::vector<EnumerationRow> enumerate_index(std::int64_t index, std::int64_t max_weight,
                                            std::int64_t max_degree, unsigned threads) {
  if (index < 1 || max_weight < 1 || max_degree < 1) {
    throw DomainError("enumerate: index and bounds must be >= 1");
  }
  const std::vector<WeightSystem> systems = candidates(index, max_weight, max_degree);
  std::vector<std::optional<EnumerationRow>> slots(systems.size());

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, systems.size())));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i = next++; i < systems.size() && !failed; i = next++) {
      try {
        slots[i] = evaluate_row(systems[i], index);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<EnumerationRow> rows;
  rows.reserve(slots.size());
  for (auto& s : slots) rows.push_back(std::move(*s));
  return rows;
}

}  // namespace sasaki5
