#pragma once

#include <string>
#include <vector>

#include "connasym/polynomial.hpp"

namespace connasym {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // filled on failure
};

// Published coefficient tables for the two pair-state families, k <= 4 and
// m <= 5; entry [m-1][k] is d_{k,m} as a polynomial in rho.
const std::vector<std::vector<PolyQ>>& golden_graph_table();
const std::vector<std::vector<PolyQ>>& golden_tournament_table();

// Engine tables against the published values, plus exact column sums.
std::vector<CheckResult> verify_tables();
// Reference sequences: irreducible-tournament weights, the triangulation
// expansion coefficients, and the weighted expansion at p = 1/4.
std::vector<CheckResult> verify_sequences();
// Series engine against brute-force enumeration, plus histogram mass.
std::vector<CheckResult> verify_oracle(int k_max = 4, int mass_max = 6,
                                       int threads = 1);
// Algebraic identities: composition-route agreement, randomized round
// trips, the product rule, and decomposition route agreement.
std::vector<CheckResult> verify_identities(int order = 12);

std::vector<CheckResult> verify_all();

// Front-end selector: tables, sequences, oracle, identities, or all.
std::vector<CheckResult> run_suite(const std::string& suite, int k_max = 4,
                                   int order = 12, int threads = 1);

}  // namespace connasym
