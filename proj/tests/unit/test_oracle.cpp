#include <doctest.h>

#include <connasym/egf.hpp>
#include <connasym/models.hpp>
#include <connasym/oracle.hpp>
#include <connasym/species.hpp>

#include <stdexcept>

using namespace connasym;

namespace {
PolyQ rho_poly(std::vector<long> ascending) {
  std::vector<BigRat> c;
  for (long v : ascending) c.emplace_back(v);
  return PolyQ(std::move(c));
}
}  // namespace

TEST_CASE("graph histogram small cases") {
  const ComponentHistogram h0 = enumerate_graph_components(0);
  REQUIRE(h0.buckets.size() == 1);
  CHECK(h0.bucket(0) == PolyQ(1));

  const ComponentHistogram h1 = enumerate_graph_components(1);
  REQUIRE(h1.buckets.size() == 1);
  CHECK(h1.bucket(1) == PolyQ(1));

  const ComponentHistogram h3 = enumerate_graph_components(3);
  REQUIRE(h3.buckets.size() == 3);
  CHECK(h3.bucket(1) == rho_poly({0, 0, 3, 1}));
  CHECK(h3.bucket(2) == rho_poly({0, 3}));
  CHECK(h3.bucket(3) == PolyQ(1));
}

TEST_CASE("tournament histogram small cases") {
  const ComponentHistogram h2 = enumerate_tournament_components(2);
  REQUIRE(h2.buckets.size() == 2);
  CHECK(h2.bucket(1) == rho_poly({-1, 1}));
  CHECK(h2.bucket(2) == PolyQ(2));
}

TEST_CASE("histogram mass equals the per-pair product") {
  const PolyQ pair = rho_poly({1, 1});
  for (int k = 0; k <= 4; ++k) {
    const int pairs = k * (k - 1) / 2;
    CHECK(enumerate_graph_components(k).total() == pair.pow(pairs));
    CHECK(enumerate_tournament_components(k).total() == pair.pow(pairs));
  }
}

TEST_CASE("diagonal coefficients") {
  for (int k = 0; k <= 3; ++k) {
    CHECK(p_polynomial(k, k + 1) == PolyQ(1));
    CHECK(q_polynomial(k, k + 1) == PolyQ(factorial(k + 1)));
  }
}

TEST_CASE("thread count does not change the histogram") {
  const ComponentHistogram a = enumerate_graph_components(5, kGraphEnumCap, 1);
  const ComponentHistogram b = enumerate_graph_components(5, kGraphEnumCap, 4);
  CHECK(a.buckets == b.buckets);
  const ComponentHistogram c = enumerate_tournament_components(4, kTournamentEnumCap, 1);
  const ComponentHistogram d = enumerate_tournament_components(4, kTournamentEnumCap, 4);
  CHECK(c.buckets == d.buckets);
}

TEST_CASE("cap is enforced") {
  CHECK_THROWS_AS(enumerate_graph_components(7, 6), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_tournament_components(6, 5), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_graph_components(-1), std::invalid_argument);
}

TEST_CASE("connected counts at rho equal one") {
  const long expected[] = {1, 1, 4, 38};
  for (int k = 1; k <= 4; ++k)
    CHECK(enumerate_graph_components(k).bucket(1).eval(BigRat(1)) ==
          BigRat(expected[k - 1]));
}

TEST_CASE("parity difference, enumerated route") {
  const ModelSpec m = make_model("simple_graphs");
  // components of the 4 graphs on 3 vertices: 1,1,1,1 vs 3 two-component
  // and 1 three-component labeling: 4 - 3 + 1 = 2
  CHECK(parity_difference(3, m).rat() == BigRat(2));
  CHECK(parity_difference(0, m).rat() == BigRat(-1));
}

TEST_CASE("parity difference, series route") {
  const ModelSpec m = make_model("constant_test");
  CHECK(parity_difference(2, m).rat() == BigRat(-1));

  // the fold over the component series reproduces the enumerated value
  const ModelSpec er1 = at_rho(make_model("er"), BigRat(1));
  const Egf a = model_series(er1, 4);
  BigRat acc(0);
  for (int c = 0; c <= 4; ++c) {
    const BigRat w = component_series(a, DecompKind::SET, c).total_weight(4).rat();
    acc += c % 2 == 1 ? w : -w;
  }
  CHECK(parity_difference(4, er1).rat() == acc);
}
