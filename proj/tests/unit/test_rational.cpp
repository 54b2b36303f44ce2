#include <doctest.h>

#include <connasym/rational.hpp>

#include <stdexcept>

using connasym::BigRat;

TEST_CASE("construction canonicalizes") {
  CHECK(BigRat::parse("4/6") == BigRat(2, 3));
  CHECK(BigRat(1, -2).str() == "-1/2");
  CHECK(BigRat(-3, -6) == BigRat(1, 2));
  CHECK(BigRat(0, 7).str() == "0");
  CHECK(BigRat(5).str() == "5");
}

TEST_CASE("arithmetic") {
  const BigRat third(1, 3);
  CHECK(third + BigRat::parse("4/6") == BigRat(1));
  CHECK(BigRat(3, 4) - BigRat(1, 4) == BigRat(1, 2));
  CHECK(BigRat(2, 3) * BigRat(3, 2) == BigRat(1));
  CHECK(BigRat(1, 2) / BigRat(1, 4) == BigRat(2));
  CHECK(-BigRat(1, 2) == BigRat(-1, 2));
  CHECK(BigRat(-5, 3).abs() == BigRat(5, 3));
  CHECK(BigRat(1, 3) < BigRat(1, 2));
}

TEST_CASE("integer powers") {
  CHECK(BigRat(2, 3).pow(3) == BigRat(8, 27));
  CHECK(BigRat(2, 3).pow(0) == BigRat(1));
  CHECK(BigRat(-2, 3).pow(-2) == BigRat(9, 4));
  CHECK_THROWS_AS(BigRat(0).pow(-1), std::domain_error);
}

TEST_CASE("decimal parsing") {
  CHECK(BigRat::parse_decimal("0.25") == BigRat(1, 4));
  CHECK(BigRat::parse_decimal("-1.5") == BigRat(-3, 2));
  CHECK(BigRat::parse_decimal("2") == BigRat(2));
  CHECK_THROWS_AS(BigRat::parse_decimal("0.2.5"), std::invalid_argument);
}

TEST_CASE("decimal rendering rounds half away from zero") {
  CHECK(BigRat(19, 32).decimal(5) == "0.59375");
  CHECK(BigRat(2, 3).decimal(3) == "0.667");
  CHECK(BigRat(-2, 3).decimal(3) == "-0.667");
  CHECK(BigRat(1).decimal(2) == "1.00");
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(BigRat::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(BigRat::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(BigRat::parse(""), std::invalid_argument);
}

TEST_CASE("factorial and binomial") {
  CHECK(connasym::factorial(0) == 1);
  CHECK(connasym::factorial(5) == 120);
  CHECK(connasym::binomial(10, 3) == 120);
  CHECK(connasym::binomial(4, 0) == 1);
  CHECK(connasym::binomial(3, 5) == 0);
}

TEST_CASE("double factorial") {
  CHECK(connasym::double_factorial(-1) == 1);
  CHECK(connasym::double_factorial(0) == 1);
  CHECK(connasym::double_factorial(5) == 15);
  CHECK(connasym::double_factorial(6) == 48);
  CHECK_THROWS_AS(connasym::double_factorial(-2), std::domain_error);
}
