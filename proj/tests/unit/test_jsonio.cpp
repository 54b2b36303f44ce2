#include <doctest.h>

#include <connasym/jsonio.hpp>

#include <stdexcept>

using namespace connasym;

TEST_CASE("rational values serialize as exact strings") {
  CHECK(rat_json(BigRat(19, 32)) == njson("19/32"));
  CHECK(rat_json(BigRat(-2)) == njson("-2"));
}

TEST_CASE("polynomials carry ascending coefficient strings") {
  const PolyQ rho = PolyQ::variable();
  const PolyQ p = -(rho.pow(3)) - BigRat(3) * rho.pow(2) + BigRat(3) * rho - PolyQ(1);
  const njson j = poly_json(p);
  CHECK(j["var"] == "rho");
  CHECK(j["coeffs"] == njson::array({"-1", "3", "-3", "-1"}));
  CHECK(poly_from_json(j) == p);
  CHECK(poly_from_json(poly_json(PolyQ())) == PolyQ());
}

TEST_CASE("histogram buckets are keyed by component count") {
  ComponentHistogram h;
  h.k = 2;
  h.buckets[1] = PolyQ::variable();
  h.buckets[2] = PolyQ(1);
  const njson j = histogram_json(h);
  CHECK(j["k"] == 2);
  CHECK(j["buckets"]["1"] == "rho");
  CHECK(j["buckets"]["2"] == "1");
}

TEST_CASE("evaluation payload") {
  const ModelSpec sg = make_model("simple_graphs");
  const njson j = evaluation_json(expansion_terms(sg, 1, 4, 1));
  CHECK(j["exact"] == "19/32");
  CHECK(j["model"] == "simple_graphs");
  CHECK(j["rho"].is_null());
  CHECK(j["d"][0] == "1");
  CHECK(j["d"][1] == "-1");

  const njson bare = evaluation_json(expansion_terms(sg, 1, 4, 1, false));
  CHECK(bare["exact"].is_null());
}

TEST_CASE("model parameters from json") {
  const ModelParams a = params_from_json(njson{{"p", "1/4"}});
  REQUIRE(a.rho.has_value());
  CHECK(*a.rho == BigRat(1, 3));

  const ModelParams b = params_from_json(njson{{"p_decimal", "0.25"}});
  CHECK(*b.rho == BigRat(1, 3));

  const ModelParams c = params_from_json(njson{{"rho", "7/2"}, {"d", 2}});
  CHECK(*c.rho == BigRat(7, 2));
  CHECK(*c.d == 2);

  CHECK_THROWS_AS(params_from_json(njson{{"rho", "1"}, {"p", "1/2"}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(params_from_json(njson{{"bogus", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(rho_from_probability(BigRat(0)), std::invalid_argument);
  CHECK_THROWS_AS(rho_from_probability(BigRat(1)), std::invalid_argument);
}

TEST_CASE("catalog listing") {
  const njson j = models_listing_json();
  CHECK(j["models"].size() == 9);
  CHECK(j["models"][0].contains("id"));
  CHECK(j["models"][0].contains("kind"));
}
