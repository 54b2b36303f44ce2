#include <doctest.h>

#include <connasym/egf.hpp>

#include <stdexcept>

using namespace connasym;

namespace {
RingElem q(long n, long d = 1) { return RingElem(BigRat(n, d)); }
}  // namespace

TEST_CASE("standard series coefficients") {
  const Egf e = Egf::standard(StdSeries::E, 6);
  const Egf l = Egf::standard(StdSeries::L, 6);
  const Egf c = Egf::standard(StdSeries::C, 6);
  for (int k = 0; k <= 6; ++k) {
    CHECK(e.coeff(k).rat() == BigRat(1) / factorial(k));
    CHECK(e.total_weight(k).rat() == BigRat(1));
    CHECK(l.coeff(k).rat() == BigRat(1));
    if (k >= 1) CHECK(c.coeff(k).rat() == BigRat(1, k));
  }
  CHECK(c.coeff(0).rat() == BigRat(0));
  CHECK(Egf::standard(StdSeries::EPlus, 4).coeff(0).rat() == BigRat(0));
  CHECK(Egf::standard(StdSeries::LPlus, 4).coeff(0).rat() == BigRat(0));
  CHECK(Egf::standard(StdSeries::One, 4).coeff(2).rat() == BigRat(0));
  CHECK(Egf::standard(StdSeries::Z, 4).coeff(1).rat() == BigRat(1));
}

TEST_CASE("log of the labeled graph series counts connected graphs") {
  Egf a(RingTag::Rational, 4);
  a.set_coeff(0, q(1));
  for (int n = 1; n <= 4; ++n) {
    const long pairs = n * (n - 1) / 2;
    a.set_coeff(n, RingElem(BigRat(2).pow(pairs) / factorial(n)));
  }
  const Egf b = log(a);
  const long expected[] = {1, 1, 4, 38};
  for (int n = 1; n <= 4; ++n)
    CHECK(b.total_weight(n).rat() == BigRat(expected[n - 1]));
}

TEST_CASE("multiplicative inverse of the sequence series") {
  const Egf inv = mult_inverse(Egf::standard(StdSeries::L, 6));
  CHECK(inv.coeff(0).rat() == BigRat(1));
  CHECK(inv.coeff(1).rat() == BigRat(-1));
  for (int k = 2; k <= 6; ++k) CHECK(inv.coeff(k).rat() == BigRat(0));

  const Egf round = mult_inverse(inv);
  CHECK(round == Egf::standard(StdSeries::L, 6));
}

TEST_CASE("compositional inverse of the nonempty sequence series") {
  // inverse of z/(1-z) is z/(1+z), alternating signs
  const Egf inv = comp_inverse(Egf::standard(StdSeries::LPlus, 6));
  CHECK(inv.coeff(0).rat() == BigRat(0));
  for (int k = 1; k <= 6; ++k)
    CHECK(inv.coeff(k).rat() == (k % 2 == 1 ? BigRat(1) : BigRat(-1)));
}

TEST_CASE("composition substitutes") {
  // L(2z) has coefficients 2^n
  Egf two_z(RingTag::Rational, 5);
  two_z.set_coeff(1, q(2));
  const Egf g = compose(Egf::standard(StdSeries::L, 5), two_z);
  for (int n = 0; n <= 5; ++n) CHECK(g.coeff(n).rat() == BigRat(2).pow(n));

  Egf bad(RingTag::Rational, 5);
  bad.set_coeff(0, q(1));
  CHECK_THROWS_AS(compose(Egf::standard(StdSeries::L, 5), bad), std::invalid_argument);
}

TEST_CASE("exp and log round trips") {
  const Egf ep = Egf::standard(StdSeries::EPlus, 8);
  CHECK(log(exp(ep)) == ep);
  const Egf e = Egf::standard(StdSeries::E, 8);
  CHECK(exp(log(e)) == e);
  CHECK_THROWS_AS(log(ep), std::invalid_argument);
  CHECK_THROWS_AS(exp(e), std::invalid_argument);
}

TEST_CASE("derivative") {
  const Egf e = Egf::standard(StdSeries::E, 6);
  CHECK(derivative(e) == e.truncated(5));
  // product rule on two small series
  Egf f(RingTag::Rational, 6);
  f.set_coeff(1, q(1));
  f.set_coeff(3, q(-2, 3));
  Egf g(RingTag::Rational, 6);
  g.set_coeff(0, q(1));
  g.set_coeff(2, q(5, 7));
  CHECK(derivative(f * g) == derivative(f) * g.truncated(5) + f.truncated(5) * derivative(g));
}

TEST_CASE("integer powers") {
  Egf one_plus_z(RingTag::Rational, 3);
  one_plus_z.set_coeff(0, q(1));
  one_plus_z.set_coeff(1, q(1));
  const Egf cube = pow_int(one_plus_z, 3);
  CHECK(cube.coeff(0).rat() == BigRat(1));
  CHECK(cube.coeff(1).rat() == BigRat(3));
  CHECK(cube.coeff(2).rat() == BigRat(3));
  CHECK(cube.coeff(3).rat() == BigRat(1));
  CHECK(pow_int(one_plus_z, 0) == Egf::standard(StdSeries::One, 3));
}

TEST_CASE("compression") {
  Egf a(RingTag::Rational, 6);
  a.set_coeff(0, q(1));
  a.set_coeff(2, q(1, 2));
  a.set_coeff(4, q(1, 24));
  a.set_coeff(6, q(1, 720));
  const Egf b = compress(a, 2);
  CHECK(b.stride() == 2);
  CHECK(b.order() == 3);
  CHECK(b.coeff(1).rat() == BigRat(1, 2));
  CHECK(b.total_weight(1).rat() == BigRat(1));

  Egf off(RingTag::Rational, 4);
  off.set_coeff(1, q(1));
  CHECK_THROWS_AS(compress(off, 2), std::invalid_argument);
}

TEST_CASE("mixed operands are rejected") {
  const Egf r = Egf::standard(StdSeries::E, 4);
  const Egf p = Egf::standard(StdSeries::E, 4, RingTag::PolynomialInRho);
  CHECK_THROWS_AS(r + p, std::invalid_argument);

  Egf s2(RingTag::Rational, 4, 2);
  CHECK_THROWS_AS(r * s2, std::invalid_argument);
}

TEST_CASE("binary operations truncate to the shorter order") {
  const Egf a = Egf::standard(StdSeries::E, 8);
  const Egf b = Egf::standard(StdSeries::E, 5);
  CHECK((a + b).order() == 5);
  CHECK((a * b).order() == 5);
}
