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

#include "sasaki5/weight_system.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

#include "sasaki5/errors.hpp"

namespace sasaki5 {

namespace {

// Keeps |w| and the c1^2 numerator comfortably inside int64 before they are
// promoted to big integers.
constexpr std::int64_t kMaxEntry = std::int64_t{1} << 40;

std::int64_t parse_entry(std::string_view field, std::string_view text) {
  if (field.empty()) {
    throw DomainError("malformed weight system '" + std::string(text) + "': empty field");
  }
  std::int64_t value = 0;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range || (ec == std::errc{} && value > kMaxEntry)) {
    throw DomainError("weight system entry out of range: '" + std::string(field) + "'");
  }
  if (ec != std::errc{} || ptr != last) {
    throw DomainError("malformed weight system '" + std::string(text) +
                      "': not an integer: '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

WeightSystem::WeightSystem(const Weights& weights, std::int64_t degree)
    : weights_(weights), degree_(degree) {
  for (const auto w : weights_) {
    if (w < 1) throw DomainError("weights must be positive, got " + std::to_string(w));
    if (w > kMaxEntry) throw DomainError("weight too large: " + std::to_string(w));
  }
  if (degree_ < 1) throw DomainError("degree must be positive, got " + std::to_string(degree_));
  if (degree_ > kMaxEntry) throw DomainError("degree too large: " + std::to_string(degree_));
}

std::int64_t WeightSystem::weight_sum() const noexcept {
  return std::accumulate(weights_.begin(), weights_.end(), std::int64_t{0});
}

WeightSystem parse_weight_system(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || text.find(':', colon + 1) != std::string_view::npos) {
    throw DomainError("malformed weight system '" + std::string(text) +
                      "': expected w0,w1,w2,w3:d");
  }
  WeightSystem::Weights weights{};
  std::string_view rest = text.substr(0, colon);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const auto comma = rest.find(',');
    const bool last = i + 1 == weights.size();
    if (last != (comma == std::string_view::npos)) {
      throw DomainError("malformed weight system '" + std::string(text) +
                        "': expected exactly four weights");
    }
    weights[i] = parse_entry(rest.substr(0, comma), text);
    if (!last) rest.remove_prefix(comma + 1);
  }
  return WeightSystem(weights, parse_entry(text.substr(colon + 1), text));
}

std::string to_string(const WeightSystem& ws) {
  const auto& w = ws.weights();
  return std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) + "," +
         std::to_string(w[3]) + ":" + std::to_string(ws.degree());
}

ReducedWeights reduced_weights(const WeightSystem& ws) {
  ReducedWeights out{};
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::int64_t w = ws.weights()[i];
    const std::int64_t g = std::gcd(ws.degree(), w);
    out[i] = {ws.degree() / g, w / g};
  }
  return out;
}

std::int64_t fano_index(const WeightSystem& ws) { return ws.weight_sum() - ws.degree(); }

bool is_brieskorn_pham_compatible(const WeightSystem& ws) {
  return std::all_of(ws.weights().begin(), ws.weights().end(),
                     [&](std::int64_t w) { return ws.degree() % w == 0; });
}

bool is_paper_family(const WeightSystem& ws) {
  auto w = ws.weights();
  std::sort(w.begin(), w.end());
  return w[0] == 1 && w[1] == 1 && w[2] == 1 && ws.degree() == w[3] + 1;
}

Isolatedness isolatedness(const WeightSystem& ws) {
  if (is_brieskorn_pham_compatible(ws)) return Isolatedness::kBrieskornPham;
  if (is_paper_family(ws)) return Isolatedness::kPaperFamily;
  return Isolatedness::kAssumed;
}

std::string_view to_string(Isolatedness iso) {
  switch (iso) {
    case Isolatedness::kBrieskornPham:
      return "brieskorn-pham";
    case Isolatedness::kPaperFamily:
      return "paper-family";
    case Isolatedness::kAssumed:
      return "assumed-isolated";
  }
  return "assumed-isolated";
}

WeightSystem paper_family_system(std::int64_t k) {
  if (k < 1) throw DomainError("family parameter k must be >= 1, got " + std::to_string(k));
  return WeightSystem({1, 1, 1, k}, k + 1);
}

}  // namespace sasaki5
