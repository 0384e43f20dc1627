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

#include "sasaki5/serialize.hpp"

#include <limits>
#include <ostream>
#include <utility>
#include <vector>

#include "sasaki5/errors.hpp"

namespace sasaki5 {

namespace {

std::string weights_csv(const WeightSystem& ws) {
  const auto& w = ws.weights();
  return std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) + "," +
         std::to_string(w[3]);
}

std::string aligned(const std::vector<std::pair<std::string, std::string>>& fields) {
  std::size_t width = 0;
  for (const auto& [key, value] : fields) width = std::max(width, key.size());
  std::string out;
  for (const auto& [key, value] : fields) {
    out += std::string(width - key.size(), ' ') + key + ": " + value + "\n";
  }
  return out;
}

std::string diffeo_text(const LinkInvariants& inv) {
  if (inv.spin != Spin::kImplied) return "unclassified (spin not implied)";
  return label(classify(inv));
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw DomainError(std::string("JSON: missing field '") + key + "'");
  }
  return j.at(key);
}

}  // namespace

Json integer_to_json(const Integer& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() &&
      n <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(n);
  }
  return n.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
      throw DomainError("JSON: bad integer string '" + j.get<std::string>() + "'");
    }
  }
  throw DomainError("JSON: expected an integer");
}

Json rational_to_json(const Rational& r) {
  return Json{{"value", to_string(r)},
              {"num", integer_to_json(numerator(r))},
              {"den", integer_to_json(denominator(r))}};
}

Rational rational_from_json(const Json& j) {
  const Integer den = integer_from_json(require(j, "den"));
  if (den == 0) throw DomainError("JSON: zero denominator");
  return Rational(integer_from_json(require(j, "num")), den);
}

Json divisor_to_json(const DivisorElement& d) {
  Json arr = Json::array();
  for (const auto& [n, c] : d.terms()) {
    arr.push_back({{"n", n},
                   {"num", integer_to_json(numerator(c))},
                   {"den", integer_to_json(denominator(c))}});
  }
  return arr;
}

DivisorElement divisor_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("JSON: divisor must be an array");
  DivisorElement out;
  for (const auto& term : j) {
    const Json& n = require(term, "n");
    if (!n.is_number_unsigned() || n.get<Index>() == 0) {
      throw DomainError("JSON: divisor index must be a positive integer");
    }
    out += scale(rational_from_json(term), lambda(n.get<Index>()));
  }
  return out;
}

Json weight_system_to_json(const WeightSystem& ws) {
  return Json{{"weights", ws.weights()}, {"degree", ws.degree()}};
}

WeightSystem weight_system_from_json(const Json& j) {
  try {
    return WeightSystem(require(j, "weights").get<WeightSystem::Weights>(),
                        require(j, "degree").get<std::int64_t>());
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("JSON: bad weight system: ") + e.what());
  }
}

Json diffeo_to_json(const DiffeoType& t) {
  struct Visitor {
    Json operator()(const Sphere5&) const { return Json{{"type", "sphere"}}; }
    Json operator()(const ConnectedSum& c) const {
      return Json{{"type", "connected-sum"}, {"k", integer_to_json(c.k)}};
    }
    Json operator()(const TorsionUndetermined& u) const {
      return Json{{"type", "torsion-undetermined"}, {"b2", integer_to_json(u.b2)}};
    }
  };
  Json j = std::visit(Visitor{}, t);
  j["label"] = label(t);
  return j;
}

DiffeoType diffeo_from_json(const Json& j) {
  const Json& type = require(j, "type");
  if (type == "sphere") return Sphere5{};
  if (type == "connected-sum") {
    Integer k = integer_from_json(require(j, "k"));
    if (k < 1) throw DomainError("JSON: connected sum needs k >= 1");
    return ConnectedSum{std::move(k)};
  }
  if (type == "torsion-undetermined") return TorsionUndetermined{integer_from_json(require(j, "b2"))};
  throw DomainError("JSON: unknown diffeomorphism type " + type.dump());
}

Json link_invariants_to_json(const LinkInvariants& inv) {
  return Json{{"weights", inv.system.weights()},
              {"degree", inv.system.degree()},
              {"divisor", divisor_to_json(inv.divisor)},
              {"b2", integer_to_json(inv.b2)},
              {"milnor_number", integer_to_json(inv.milnor_number)},
              {"torsion_free", to_string(inv.torsion_free)},
              {"spin", to_string(inv.spin)}};
}

LinkInvariants link_invariants_from_json(const Json& j) {
  const Json& torsion = require(j, "torsion_free");
  const Json& spin = require(j, "spin");
  if (torsion != "yes" && torsion != "unknown") throw DomainError("JSON: bad torsion_free");
  if (spin != "implied" && spin != "not-implied") throw DomainError("JSON: bad spin");
  return LinkInvariants{
      .system = weight_system_from_json(j),
      .divisor = divisor_from_json(require(j, "divisor")),
      .b2 = integer_from_json(require(j, "b2")),
      .milnor_number = integer_from_json(require(j, "milnor_number")),
      .torsion_free = torsion == "yes" ? TorsionFree::kYes : TorsionFree::kUnknown,
      .spin = spin == "implied" ? Spin::kImplied : Spin::kNotImplied,
  };
}

Json hodge_to_json(const BasicHodgeData& h) {
  return Json{{"q", h.q},           {"p_g", h.p_g},           {"h11", h.h11},
              {"chi_b", chi_b(h)},  {"tau_b", tau_b(h)},      {"chi_hol", chi_hol(h)},
              {"p_a", p_a(h)}};
}

Json family_report_to_json(const FamilyReport& r) {
  return Json{{"k", r.k},
              {"link", link_invariants_to_json(r.invariants)},
              {"diffeo", diffeo_to_json(r.diffeo)},
              {"c1_squared", rational_to_json(r.c1_squared)},
              {"picard", integer_to_json(r.picard)},
              {"moduli_real_dim", r.moduli_real_dim}};
}

Json enumeration_to_json(std::span<const EnumerationRow> rows) {
  Json arr = Json::array();
  for (const auto& row : rows) {
    Json j{{"weights", row.system.weights()},
           {"degree", row.system.degree()},
           {"index", row.index},
           {"b2", nullptr},
           {"milnor_number", nullptr},
           {"torsion_free", nullptr},
           {"diffeo", nullptr},
           {"c1_squared", rational_to_json(row.c1_squared)},
           {"picard", nullptr},
           {"isolatedness_flag", to_string(row.status)}};
    if (row.invariants) {
      j["b2"] = integer_to_json(row.invariants->b2);
      j["milnor_number"] = integer_to_json(row.invariants->milnor_number);
      j["torsion_free"] = to_string(row.invariants->torsion_free);
    }
    if (row.diffeo) j["diffeo"] = label(*row.diffeo);
    if (row.picard) j["picard"] = integer_to_json(*row.picard);
    arr.push_back(std::move(j));
  }
  return arr;
}

void write_enumeration_tsv(std::ostream& os, std::span<const EnumerationRow> rows) {
  os << "weights\tdegree\tindex\tb2\tmilnor_number\ttorsion_free\tdiffeo\tc1_squared\tpicard"
        "\tisolatedness_flag\n";
  for (const auto& row : rows) {
    const bool have = row.invariants.has_value();
    os << weights_csv(row.system) << '\t' << row.system.degree() << '\t' << row.index << '\t'
       << (have ? to_string(row.invariants->b2) : "-") << '\t'
       << (have ? to_string(row.invariants->milnor_number) : "-") << '\t'
       << (have ? std::string(to_string(row.invariants->torsion_free)) : "-") << '\t'
       << (row.diffeo ? label(*row.diffeo) : "-") << '\t'
       // c1^2 is always written as p/q, including integers.
       << numerator(row.c1_squared) << '/' << denominator(row.c1_squared) << '\t'
       << (row.picard ? to_string(*row.picard) : "-") << '\t' << to_string(row.status) << '\n';
  }
}

std::string link_invariants_text(const LinkInvariants& inv) {
  return aligned({{"weights", weights_csv(inv.system)},
                  {"degree", std::to_string(inv.system.degree())},
                  {"divisor", to_string(inv.divisor)},
                  {"b2", to_string(inv.b2)},
                  {"milnor_number", to_string(inv.milnor_number)},
                  {"torsion_free", std::string(to_string(inv.torsion_free))},
                  {"spin", std::string(to_string(inv.spin))},
                  {"diffeo", diffeo_text(inv)}});
}

std::string family_report_text(const FamilyReport& r) {
  return aligned({{"k", std::to_string(r.k)},
                  {"weights", weights_csv(r.system)},
                  {"degree", std::to_string(r.system.degree())},
                  {"divisor", to_string(r.invariants.divisor)},
                  {"b2", to_string(r.invariants.b2)},
                  {"milnor_number", to_string(r.invariants.milnor_number)},
                  {"torsion_free", std::string(to_string(r.invariants.torsion_free))},
                  {"spin", std::string(to_string(r.invariants.spin))},
                  {"diffeo", label(r.diffeo)},
                  {"c1_squared", to_string(r.c1_squared)},
                  {"picard", to_string(r.picard)},
                  {"moduli_real_dim", std::to_string(r.moduli_real_dim)}});
}

std::string hodge_text(const BasicHodgeData& h) {
  return "chi_B: " + std::to_string(chi_b(h)) + ", tau_B: " + std::to_string(tau_b(h)) +
         ", chi_hol: " + std::to_string(chi_hol(h)) + ", p_a: " + std::to_string(p_a(h));
}

}  // namespace sasaki5
