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

// Acceptance suite: one PASS/FAIL line per criterion, all exact.
// Usage: acceptance <path-to-sasaki5-cli>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "sasaki5/classify5.hpp"
#include "sasaki5/divisor.hpp"
#include "sasaki5/errors.hpp"
#include "sasaki5/family.hpp"
#include "sasaki5/milnor_orlik.hpp"
#include "sasaki5/root_multiset.hpp"
#include "sasaki5/surface_invariants.hpp"
#include "sasaki5/weight_system.hpp"
#include "support.hpp"

using namespace sasaki5;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

using Seconds = std::chrono::duration<double>;

bool report(int id, const std::string& title, const std::function<Outcome()>& body,
            double budget_seconds = 0) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double elapsed = Seconds(std::chrono::steady_clock::now() - start).count();
  if (budget_seconds > 0 && elapsed >= budget_seconds) {
    o.expect(false, "runtime " + std::to_string(elapsed) + " s over budget " +
                        std::to_string(budget_seconds) + " s");
  }
  std::printf("[%s] AC%d %s (%.3f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), elapsed,
              o.detail.empty() ? "" : ": ", o.detail.c_str());
  return o.pass;
}

std::string capture(const std::string& command) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) throw std::runtime_error("popen failed: " + command);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  return out;
}

// The 200 weight systems shared by AC2, AC3 and AC4.
std::vector<WeightSystem> random_systems() {
  testing::Rng rng(20260315);
  std::vector<WeightSystem> out;
  for (int i = 0; i < 200; ++i) out.push_back(testing::random_weight_system(rng, 6, 12));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-sasaki5-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const DivisorElement one = lambda(1);
  const auto systems = random_systems();
  bool all = true;

  all &= report(1, "family b2 = k and divisor = (k-1)L_{k+1} + L1, k=1..50", [&] {
    Outcome o;
    for (std::int64_t k = 1; k <= 50; ++k) {
      const WeightSystem ws = paper_family_system(k);
      o.expect(b2_of_link(ws) == k, "b2 mismatch at k=" + std::to_string(k));
      o.expect(char_poly_divisor(ws) == scale(k - 1, lambda(static_cast<Index>(k + 1))) + one,
               "divisor mismatch at k=" + std::to_string(k));
    }
    return o;
  }, 1.0);

  all &= report(2, "oracle equivalence: 500 products, 200 systems", [&] {
    Outcome o;
    testing::Rng rng(500);
    for (int i = 0; i < 500; ++i) {
      const auto a = testing::random_divisor(rng, 12, 3);
      const auto b = testing::random_divisor(rng, 12, 3);
      o.expect(to_multiset(mul(a, b)) == convolve(to_multiset(a), to_multiset(b)),
               "product " + to_string(a) + " * " + to_string(b));
    }
    int integral = 0;
    for (const auto& ws : systems) {
      const DivisorElement formal = milnor_orlik_product(ws);
      o.expect(coeff_sum(formal) == mult_at_zero(to_multiset(formal)), "system " + to_string(ws));
      try {
        const DivisorElement d = char_poly_divisor(ws);
        ++integral;
        o.expect(d == formal, "checked != formal for " + to_string(ws));
        o.expect(coeff_sum(d) == mult_at_zero(to_multiset(d)), "system " + to_string(ws));
      } catch (const IntegralityViolation&) {
        bool fractional = false;
        for (const auto& [n, c] : formal.terms()) fractional = fractional || !is_integer(c);
        o.expect(fractional, "spurious integrality error for " + to_string(ws));
      }
    }
    o.expect(integral > 0, "no integral systems drawn");
    return o;
  }, 10.0);

  all &= report(3, "Milnor number: weighted_degree = prod (d - w_i)/w_i, 200 systems", [&] {
    Outcome o;
    for (const auto& ws : systems) {
      Rational expected = 1;
      for (const auto w : ws.weights()) expected *= Rational(ws.degree() - w, w);
      o.expect(weighted_degree(milnor_orlik_product(ws)) == expected, "system " + to_string(ws));
    }
    return o;
  });

  all &= report(4, "c1^2 = 4(k+1)/k for k=1..50; c1^2 >= 0 when |w| >= d", [&] {
    Outcome o;
    for (std::int64_t k = 1; k <= 50; ++k) {
      o.expect(c1_squared(paper_family_system(k)) == Rational(4 * (k + 1), k),
               "k=" + std::to_string(k));
    }
    for (const auto& ws : systems) {
      if (ws.weight_sum() >= ws.degree()) o.expect(c1_squared(ws) >= 0, "system " + to_string(ws));
    }
    return o;
  });

  all &= report(5, "chi_B + tau_B = 4 chi_hol on [0,10]^3", [&] {
    Outcome o;
    for (std::int64_t q = 0; q <= 10; ++q) {
      for (std::int64_t pg = 0; pg <= 10; ++pg) {
        for (std::int64_t h11 = 0; h11 <= 10; ++h11) {
          const BasicHodgeData h{q, pg, h11};
          o.expect(chi_b(h) + tau_b(h) == 4 * chi_hol(h), "triple failed");
        }
      }
    }
    return o;
  });

  all &= report(6, "picard = k+1 = leaf b2, strictly increasing, k=1..50", [&] {
    Outcome o;
    Integer previous = 0;
    for (std::int64_t k = 1; k <= 50; ++k) {
      const Integer b2 = b2_of_link(paper_family_system(k));
      const Integer picard = picard_number(b2);
      o.expect(picard == k + 1, "picard at k=" + std::to_string(k));
      o.expect(leaf_space_bounds(static_cast<std::int64_t>(b2)).b2_F == k + 1,
               "leaf b2 at k=" + std::to_string(k));
      o.expect(picard > previous, "not increasing at k=" + std::to_string(k));
      previous = picard;
    }
    return o;
  });

  all &= report(7, "classification k#(S2xS3) for k=1..50 and S^5", [&] {
    Outcome o;
    for (std::int64_t k = 1; k <= 50; ++k) {
      o.expect(label(classify(link_invariants(paper_family_system(k)))) ==
                   std::to_string(k) + "#(S2xS3)",
               "k=" + std::to_string(k));
    }
    o.expect(label(classify(link_invariants(WeightSystem({1, 1, 1, 1}, 1)))) == "S^5",
             "(1,1,1,1;1)");
    return o;
  });

  all &= report(8, "moduli real dimension = 2(k-5), k=5..50", [&] {
    Outcome o;
    for (std::int64_t k = 5; k <= 50; ++k) {
      const ModuliCount c = moduli_count(k);
      o.expect(c.complex_dim == k - 5, "N - G at k=" + std::to_string(k));
      o.expect(moduli_real_dimension(k) == 2 * (k - 5), "k=" + std::to_string(k));
    }
    return o;
  });

  all &= report(9, "enumerate --index 2 --max-weight 8 --max-degree 9 is deterministic", [&] {
    Outcome o;
    const std::string command =
        "'" + cli + "' enumerate --index 2 --max-weight 8 --max-degree 9 --tsv";
    const std::string first = capture(command);
    const std::string second = capture(command + " --threads 1");
    o.expect(!first.empty(), "no output");
    o.expect(first == second, "outputs differ");
    std::istringstream lines(first);
    std::string line;
    int family_rows = 0;
    while (std::getline(lines, line)) {
      for (int k = 1; k <= 8; ++k) {
        if (line.rfind("1,1,1," + std::to_string(k) + "\t" + std::to_string(k + 1) + "\t", 0) == 0) {
          ++family_rows;
        }
      }
    }
    o.expect(family_rows == 8, "found " + std::to_string(family_rows) + " family rows");
    return o;
  });

  std::printf("%s\n", all ? "ALL ACCEPTANCE CRITERIA PASSED" : "SOME ACCEPTANCE CRITERIA FAILED");
  return all ? 0 : 1;
}
