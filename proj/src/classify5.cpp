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

#include "sasaki5/classify5.hpp"

#include <regex>

namespace sasaki5 {

DiffeoType classify(const LinkInvariants& inv) {
  if (inv.spin != Spin::kImplied) {
    throw ClassificationPreconditionError("cannot classify " + to_string(inv.system) +
                                          ": spin is not implied (Fano index <= 0)");
  }
  if (inv.torsion_free == TorsionFree::kUnknown) return TorsionUndetermined{inv.b2};
  if (inv.b2 == 0) return Sphere5{};
  return ConnectedSum{inv.b2};
}

std::string label(const DiffeoType& type) {
  struct Visitor {
    std::string operator()(const Sphere5&) const { return "S^5"; }
    std::string operator()(const ConnectedSum& c) const { return to_string(c.k) + "#(S2xS3)"; }
    std::string operator()(const TorsionUndetermined& t) const {
      return "b2=" + to_string(t.b2) + ",torsion=?";
    }
  };
  return std::visit(Visitor{}, type);
}

DiffeoType parse_label(std::string_view text) {
  static const std::regex kSum(R"(([1-9][0-9]*)#\(S2xS3\))");
  static const std::regex kUndetermined(R"(b2=(0|[1-9][0-9]*),torsion=\?)");
  const std::string s(text);
  if (s == "S^5") return Sphere5{};
  std::smatch m;
  if (std::regex_match(s, m, kSum)) return ConnectedSum{Integer(m[1].str())};
  if (std::regex_match(s, m, kUndetermined)) return TorsionUndetermined{Integer(m[1].str())};
  throw DomainError("unrecognized diffeomorphism label '" + s + "'");
}

}  // namespace sasaki5
