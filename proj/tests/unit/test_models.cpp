#include <doctest.h>

#include <connasym/models.hpp>

#include <stdexcept>

using namespace connasym;

namespace {
ModelParams with_d(long d) { ModelParams p; p.d = d; return p; }
ModelParams with_P(long P) { ModelParams p; p.P = P; return p; }
ModelParams with_D(long D) { ModelParams p; p.D = D; return p; }
ModelParams with_rho(BigRat r) { ModelParams p; p.rho = std::move(r); return p; }
}  // namespace

TEST_CASE("catalog") {
  const auto infos = list_models();
  CHECK(infos.size() == 9);
  bool saw_graphs = false, saw_ties = false;
  for (const auto& info : infos) {
    if (info.id == "simple_graphs") saw_graphs = true;
    if (info.id == "tournaments_ties") {
      saw_ties = true;
      CHECK(info.kind == DecompKind::SEQ);
    }
  }
  CHECK(saw_graphs);
  CHECK(saw_ties);
}

TEST_CASE("weight sequences") {
  const ModelSpec er = make_model("er");
  const PolyQ pair = PolyQ::variable() + PolyQ(1);
  CHECK(weight_sequence(er, 3).poly() == pair.pow(3));
  CHECK(weight_sequence(er, 0).poly() == PolyQ(1));

  CHECK(weight_sequence(make_model("qss"), 2).rat() == BigRat(9));
  CHECK(weight_sequence(make_model("gem", with_D(3)), 2).rat() == BigRat(1));
  CHECK(weight_sequence(make_model("constant_test"), 7).rat() == BigRat(1));
}

TEST_CASE("numeric instances agree with the unweighted models") {
  const ModelSpec er1 = at_rho(make_model("er"), BigRat(1));
  const ModelSpec sg = make_model("simple_graphs");
  for (long n = 0; n <= 12; ++n)
    CHECK(weight_sequence(er1, n).rat() == weight_sequence(sg, n).rat());
  CHECK(er1.display == "er(rho=1)");

  const ModelSpec er2 = at_rho(make_model("er"), BigRat(2));
  const ModelSpec mg = make_model("multigraphs", with_d(2));
  for (long n = 0; n <= 8; ++n)
    CHECK(weight_sequence(er2, n).rat() == weight_sequence(mg, n).rat());
}

TEST_CASE("tournament totals match graph totals") {
  const ModelSpec ties = make_model("tournaments_ties");
  const ModelSpec er = make_model("er");
  for (long n = 0; n <= 12; ++n)
    CHECK(weight_sequence(ties, n).poly() == weight_sequence(er, n).poly());
}

TEST_CASE("stride detection") {
  CHECK(make_model("triangulations").stride == 2);
  CHECK(make_model("p_angulations", with_P(3)).stride == 2);
  CHECK(make_model("p_angulations", with_P(4)).stride == 1);
  CHECK(make_model("gem", with_D(2)).stride == 2);
  CHECK(make_model("simple_graphs").stride == 1);
  CHECK(infer_stride(make_model("triangulations"), 16) == 2);
  CHECK(infer_stride(make_model("simple_graphs"), 16) == 1);

  const ModelSpec odd = make_model("p_angulations", with_P(3));
  for (long n = 1; n <= 19; n += 2)
    CHECK(weight_sequence(odd, n).rat() == BigRat(0));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(make_model("no_such_model"), std::invalid_argument);
  CHECK_THROWS_AS(make_model("multigraphs"), std::invalid_argument);
  CHECK_THROWS_AS(make_model("multigraphs", with_d(0)), std::invalid_argument);
  CHECK_THROWS_AS(make_model("gem", with_D(1)), std::invalid_argument);
  CHECK_THROWS_AS(make_model("p_angulations", with_P(2)), std::invalid_argument);
  CHECK_THROWS_AS(make_model("er", with_d(2)), std::invalid_argument);
  CHECK_THROWS_AS(make_model("qss", with_rho(BigRat(1, 2))), std::invalid_argument);
  CHECK_THROWS_AS(at_rho(make_model("simple_graphs"), BigRat(1, 2)),
                  std::invalid_argument);
}

TEST_CASE("series construction validates the stride") {
  ModelSpec broken = make_model("constant_test");
  broken.stride = 2;
  CHECK_THROWS_AS(model_series(broken, 4), std::invalid_argument);
}

TEST_CASE("growth probe verdicts") {
  const GrowthReport good = growth_probe(make_model("simple_graphs"), 40);
  CHECK(good.verdict == "pass");
  CHECK(good.ratio_ok);
  CHECK(good.convolution_ok);
  CHECK(good.violations.empty());
  // normalized ratios n * a_{n-1}/a_n = n^2 / 2^{n-1}
  REQUIRE(good.ratios.size() >= 2);
  CHECK(good.ratios[0] == std::pair<long, BigRat>(1, BigRat(1)));
  CHECK(good.ratios[1] == std::pair<long, BigRat>(2, BigRat(2)));

  const GrowthReport bad = growth_probe(make_model("constant_test"), 10);
  CHECK(bad.verdict == "fail");
  CHECK_FALSE(bad.ratio_ok);
  CHECK_FALSE(bad.violations.empty());

  CHECK(growth_probe(make_model("qss"), 40).verdict == "pass");
  CHECK(growth_probe(make_model("gem", with_D(2)), 30).verdict == "pass");

  const GrowthReport narrow = growth_probe(make_model("simple_graphs"), 5);
  CHECK(narrow.verdict == "inconclusive");

  // symbolic weighted models are probed at rho = 1
  const GrowthReport sym = growth_probe(make_model("er"), 30);
  CHECK(sym.model == "er(rho=1)");
  CHECK(sym.verdict == "pass");

  CHECK_THROWS_AS(growth_probe(at_rho(make_model("er"), BigRat(0)), 20),
                  std::domain_error);
  CHECK_THROWS_AS(growth_probe(make_model("simple_graphs"), 0),
                  std::invalid_argument);
}
