#include "doctest.h"

#include <cmath>

#include "sunrise/errors.hpp"
#include "sunrise/rational.hpp"

using sunrise::DomainError;
using sunrise::ParseError;
using sunrise::Rational;

TEST_CASE("construction keeps canonical reduced form") {
  CHECK(Rational(4, 6).str() == "2/3");
  CHECK(Rational(-4, 6).str() == "-2/3");
  CHECK(Rational(4, -6).str() == "-2/3");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(7, 1).str() == "7");
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("parsing accepts p/q, integers and terminating decimals") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("6/8") == Rational(3, 4));
  CHECK(Rational::parse("42") == Rational(42));
  CHECK(Rational::parse("0.95") == Rational(19, 20));
  CHECK(Rational::parse("-0.5") == Rational(-1, 2));
  CHECK(Rational::parse("31.25") == Rational(125, 4));
}

TEST_CASE("parsing rejects garbage") {
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5/2"), ParseError);
  CHECK_THROWS_AS(Rational::parse("2."), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
}

TEST_CASE("arithmetic and comparisons are exact") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(a > b);
  CHECK(Rational(1, 3) + Rational(2, 3) == Rational(1));
  CHECK_THROWS_AS(a / Rational(0), DomainError);
}

TEST_CASE("powers are exact") {
  CHECK(Rational(9, 10).pow(3) == Rational(729, 1000));
  CHECK(Rational(1, 2).pow(20) == Rational(1, 1 << 20));
  CHECK(Rational(-2, 3).pow(2) == Rational(4, 9));
  CHECK(Rational(5).pow(0) == Rational(1));
}

TEST_CASE("doubles convert exactly in both directions") {
  CHECK(Rational::from_double(0.5) == Rational(1, 2));
  CHECK(Rational::from_double(0.1) != Rational(1, 10));  // 0.1 is not dyadic
  const double x = std::exp(-3.0);
  CHECK(Rational::from_double(x).to_double() == x);
  CHECK_THROWS_AS(Rational::from_double(std::nan("")), DomainError);
}

TEST_CASE("decimal_str expands exact decimals and falls back to fractions") {
  CHECK(Rational(19, 20).decimal_str() == "0.95");
  CHECK(Rational(1, 8).decimal_str() == "0.125");
  CHECK(Rational(-3, 4).decimal_str() == "-0.75");
  CHECK(Rational(7).decimal_str() == "7");
  CHECK(Rational(1, 3).decimal_str() == "1/3");
  CHECK(Rational::parse(Rational(123, 800).decimal_str()) == Rational(123, 800));
}
