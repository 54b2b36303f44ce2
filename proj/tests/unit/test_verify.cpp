#include <doctest.h>

#include <connasym/verify.hpp>

#include <stdexcept>

using namespace connasym;

namespace {
void require_all_pass(const std::vector<CheckResult>& checks) {
  REQUIRE(!checks.empty());
  for (const auto& c : checks) {
    INFO(c.name, ": ", c.detail);
    CHECK(c.pass);
  }
}
}  // namespace

TEST_CASE("pinned coefficient tables") { require_all_pass(verify_tables()); }

TEST_CASE("pinned sequences") { require_all_pass(verify_sequences()); }

TEST_CASE("enumeration cross-check") { require_all_pass(verify_oracle(3, 4)); }

TEST_CASE("algebraic identities") { require_all_pass(verify_identities(12)); }

TEST_CASE("suite dispatch") {
  CHECK_THROWS_AS(run_suite("bogus"), std::invalid_argument);
  const auto checks = run_suite("tables");
  require_all_pass(checks);
  CHECK(checks.size() == 12);
}

TEST_CASE("golden tables expose the pinned polynomials") {
  const auto& g = golden_graph_table();
  REQUIRE(g.size() == 5);
  CHECK(g[0][2].str() == "-rho+1");
  CHECK(g[0][0] == PolyQ(1));
  const auto& t = golden_tournament_table();
  CHECK(t[4][4] == PolyQ(120));
  CHECK(t[0][1] == PolyQ(-2));
}
