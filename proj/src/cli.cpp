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

#include "sasaki5/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <vector>

#include "sasaki5/classify5.hpp"
#include "sasaki5/errors.hpp"
#include "sasaki5/family.hpp"
#include "sasaki5/milnor_orlik.hpp"
#include "sasaki5/serialize.hpp"
#include "sasaki5/surface_invariants.hpp"
#include "sasaki5/weight_system.hpp"

namespace sasaki5::cli {

namespace {

struct Options {
  std::string system;
  bool json = false;
  std::int64_t k = 0;
  std::int64_t q = 0;
  std::int64_t p_g = 0;
  std::int64_t h11 = 0;
  std::int64_t index = 0;
  std::int64_t max_weight = 0;
  std::int64_t max_degree = 0;
  std::string out_path;
  bool tsv = false;
  unsigned threads = 0;
};

void print_json(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

void write_enumeration(const Options& opt, std::ostream& out) {
  const auto rows = enumerate_index(opt.index, opt.max_weight, opt.max_degree, opt.threads);
  auto emit = [&](std::ostream& os) {
    if (opt.json) {
      print_json(os, enumeration_to_json(rows));
    } else {
      write_enumeration_tsv(os, rows);
    }
  };
  if (opt.out_path.empty()) {
    emit(out);
    return;
  }
  std::ofstream file(opt.out_path, std::ios::binary);
  if (!file) throw DomainError("cannot open output file '" + opt.out_path + "'");
  emit(file);
  if (!file.flush()) throw DomainError("failed writing '" + opt.out_path + "'");
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of links of weighted homogeneous hypersurface singularities",
               "sasaki5"};
  app.require_subcommand(1);
  Options opt;
  const char* ws_help = "weight system w0,w1,w2,w3:d";

  auto* divisor = app.add_subcommand("divisor", "monodromy characteristic-polynomial divisor");
  divisor->add_option("system", opt.system, ws_help)->required();
  divisor->add_flag("--json", opt.json, "JSON output");

  auto* link = app.add_subcommand("link", "invariants of the 5-dimensional link");
  link->add_option("system", opt.system, ws_help)->required();
  link->add_flag("--json", opt.json, "JSON output");

  auto* family = app.add_subcommand("family", "report for weights (1,1,1,k), degree k+1");
  family->add_option("--k", opt.k, "family parameter")->required()->check(CLI::PositiveNumber);
  family->add_flag("--json", opt.json, "JSON output");

  auto* hodge = app.add_subcommand("hodge", "basic Euler characteristic, signature, genera");
  hodge->add_option("--q", opt.q, "irregularity")->required();
  hodge->add_option("--pg", opt.p_g, "geometric genus")->required();
  hodge->add_option("--h11", opt.h11, "h^{1,1}_B")->required();
  hodge->add_flag("--json", opt.json, "JSON output");

  auto* classify_cmd = app.add_subcommand("classify", "diffeomorphism type of the link");
  classify_cmd->add_option("system", opt.system, ws_help)->required();
  classify_cmd->add_flag("--json", opt.json, "JSON output");

  auto* enumerate = app.add_subcommand("enumerate", "tabulate weight systems of a fixed index");
  enumerate->add_option("--index", opt.index, "Fano index |w| - d")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--max-weight", opt.max_weight, "largest weight")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--max-degree", opt.max_degree, "largest degree")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--out", opt.out_path, "output file (default: standard output)");
  auto* tsv_flag = enumerate->add_flag("--tsv", opt.tsv, "TSV output (default)");
  enumerate->add_flag("--json", opt.json, "JSON output")->excludes(tsv_flag);
  enumerate->add_option("--threads", opt.threads, "worker threads (0 = all cores)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (divisor->parsed()) {
      const DivisorElement d = char_poly_divisor(parse_weight_system(opt.system));
      if (opt.json) {
        print_json(out, divisor_to_json(d));
      } else {
        out << to_string(d) << '\n';
      }
    } else if (link->parsed()) {
      const LinkInvariants inv = link_invariants(parse_weight_system(opt.system));
      if (opt.json) {
        print_json(out, link_invariants_to_json(inv));
      } else {
        out << link_invariants_text(inv);
      }
    } else if (family->parsed()) {
      const FamilyReport r = paper_family(opt.k);
      if (opt.json) {
        print_json(out, family_report_to_json(r));
      } else {
        out << family_report_text(r);
      }
    } else if (hodge->parsed()) {
      const BasicHodgeData h = make_hodge_data(opt.q, opt.p_g, opt.h11);
      if (opt.json) {
        print_json(out, hodge_to_json(h));
      } else {
        out << hodge_text(h) << '\n';
      }
    } else if (classify_cmd->parsed()) {
      const DiffeoType t = classify(link_invariants(parse_weight_system(opt.system)));
      if (opt.json) {
        print_json(out, diffeo_to_json(t));
      } else {
        out << label(t) << '\n';
      }
    } else if (enumerate->parsed()) {
      write_enumeration(opt, out);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}

}  // namespace sasaki5::cli
