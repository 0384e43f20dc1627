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

#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "sasaki5/classify5.hpp"
#include "sasaki5/divisor.hpp"
#include "sasaki5/family.hpp"
#include "sasaki5/milnor_orlik.hpp"
#include "sasaki5/surface_invariants.hpp"
#include "sasaki5/weight_system.hpp"

// JSON, TSV and aligned-text renderings. Rationals always appear as "p/q"
// strings; JSON additionally carries exact {num, den}. Integers that do not
// fit in int64 are emitted as decimal strings.

namespace sasaki5 {

using Json = nlohmann::ordered_json;

Json integer_to_json(const Integer& n);
Integer integer_from_json(const Json& j);

/// {"value": "p/q", "num": p, "den": q}
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// [{"n": n, "num": p, "den": q}, ...] in ascending n.
Json divisor_to_json(const DivisorElement& d);
DivisorElement divisor_from_json(const Json& j);

/// {"weights": [...], "degree": d}
Json weight_system_to_json(const WeightSystem& ws);
WeightSystem weight_system_from_json(const Json& j);

/// {"type": "sphere" | "connected-sum" | "torsion-undetermined", "k"?, "b2"?, "label"}
Json diffeo_to_json(const DiffeoType& t);
DiffeoType diffeo_from_json(const Json& j);

/// {weights, degree, divisor, b2, milnor_number, torsion_free, spin}
Json link_invariants_to_json(const LinkInvariants& inv);
LinkInvariants link_invariants_from_json(const Json& j);

/// {q, p_g, h11, chi_b, tau_b, chi_hol, p_a}
Json hodge_to_json(const BasicHodgeData& h);

Json family_report_to_json(const FamilyReport& r);

Json enumeration_to_json(std::span<const EnumerationRow> rows);

/// Header row plus one line per row, tab separated, LF terminated.
void write_enumeration_tsv(std::ostream& os, std::span<const EnumerationRow> rows);

/// Multi-line "key: value" blocks with right-aligned keys.
std::string link_invariants_text(const LinkInvariants& inv);
std::string family_report_text(const FamilyReport& r);

/// "chi_B: 3, tau_B: 1, chi_hol: 1, p_a: 0"
std::string hodge_text(const BasicHodgeData& h);

}  // namespace sasaki5
