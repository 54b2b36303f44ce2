#include <doctest.h>

#include <connasym/models.hpp>
#include <connasym/species.hpp>
#include <connasym/verify.hpp>

#include <stdexcept>

using namespace connasym;

TEST_CASE("connected pieces of the labeled graph series") {
  const Egf a = model_series(make_model("simple_graphs"), 4);
  const Egf b = connected_series(a, DecompKind::SET);
  const long expected[] = {1, 1, 4, 38};
  for (int n = 1; n <= 4; ++n)
    CHECK(b.total_weight(n).rat() == BigRat(expected[n - 1]));
}

TEST_CASE("component counts partition the full series") {
  const Egf a = model_series(make_model("simple_graphs"), 4);
  Egf sum(RingTag::Rational, 4);
  for (int m = 0; m <= 4; ++m) sum = sum + component_series(a, DecompKind::SET, m);
  CHECK(sum == a);

  const Egf t = model_series(at_rho(make_model("tournaments_ties"), BigRat(1)), 4);
  Egf tsum(RingTag::Rational, 4);
  for (int m = 0; m <= 4; ++m) tsum = tsum + component_series(t, DecompKind::SEQ, m);
  CHECK(tsum == t);
}

TEST_CASE("preconditions on the constant slot") {
  Egf a(RingTag::Rational, 3);
  a.set_coeff(0, RingElem(BigRat(2)));
  CHECK_THROWS_AS(connected_series(a, DecompKind::SET), std::invalid_argument);
  CHECK_THROWS_AS(connected_series(a, DecompKind::CYC), std::invalid_argument);
}

TEST_CASE("cycle decomposition of the cycle series") {
  // the cycle series is SET-of-CYC of a single atom, so its connected
  // piece under CYC is the atom itself
  const Egf c = Egf::standard(StdSeries::C, 6);
  CHECK(connected_series(c, DecompKind::CYC) == Egf::standard(StdSeries::Z, 6));
  for (int m = 1; m <= 6; ++m) {
    const Egf part = component_series(c, DecompKind::CYC, m);
    CHECK(part.coeff(m).rat() == BigRat(1, m));
    if (m >= 2) CHECK(part.coeff(m - 1).rat() == BigRat(0));
  }
  CHECK(component_series(c, DecompKind::CYC, 0) == Egf(RingTag::Rational, 6));
}

TEST_CASE("expansion coefficients match the pinned graph values") {
  const ModelSpec er = make_model("er");
  const auto& golden = golden_graph_table();
  for (int m = 1; m <= 5; ++m) {
    const ExpansionTable t = d_coefficients(er, m, 4);
    REQUIRE(t.d.size() == 5);
    for (int k = 0; k <= 4; ++k) CHECK(t.d[k].poly() == golden[m - 1][k]);
  }
}

TEST_CASE("expansion coefficients match the pinned tournament values") {
  const ModelSpec ties = make_model("tournaments_ties");
  const auto& golden = golden_tournament_table();
  for (int m = 1; m <= 5; ++m) {
    const ExpansionTable t = d_coefficients(ties, m, 4);
    for (int k = 0; k <= 4; ++k) CHECK(t.d[k].poly() == golden[m - 1][k]);
  }
}

TEST_CASE("composition route identity") { CHECK(equipotence_check(12)); }

TEST_CASE("decomposition names round trip") {
  CHECK(decomp_from_name("SET") == DecompKind::SET);
  CHECK(decomp_from_name(decomp_name(DecompKind::CYC)) == DecompKind::CYC);
  CHECK_THROWS_AS(decomp_from_name("RING"), std::invalid_argument);
}
