#include "doctest.h"
#include "luka/rational.hpp"

using luka::Rational01;

TEST_CASE("construction reduces and range-checks") {
  CHECK(Rational01::of(6, 10) == Rational01::of(3, 5));
  CHECK(Rational01::of(0, 7).is_zero());
  CHECK(Rational01::of(7, 7).is_one());
  CHECK_THROWS_AS(Rational01::of(3, 2), std::domain_error);
  CHECK_THROWS_AS(Rational01::of(-1, 2), std::domain_error);
  CHECK_THROWS_AS(Rational01::of(1, 0), std::domain_error);
}

TEST_CASE("parsing decimals is exact") {
  CHECK(*Rational01::parse("0.6") == Rational01::of(3, 5));
  CHECK(*Rational01::parse("0.252") == Rational01::of(63, 250));
  CHECK(*Rational01::parse("3/5") == Rational01::of(3, 5));
  CHECK(*Rational01::parse("1") == Rational01::one());
  CHECK(*Rational01::parse("1.0") == Rational01::one());
  CHECK(*Rational01::parse("0") == Rational01::zero());
  CHECK_FALSE(Rational01::parse("1.5").has_value());
  CHECK_FALSE(Rational01::parse("-0.5").has_value());
  CHECK_FALSE(Rational01::parse("7/5").has_value());
  CHECK_FALSE(Rational01::parse("").has_value());
  CHECK_FALSE(Rational01::parse("abc").has_value());
  CHECK_FALSE(Rational01::parse("1/0").has_value());
}

TEST_CASE("lukasiewicz connective values") {
  auto r = [](long long n, long long d) { return Rational01::of(n, d); };
  CHECK(Rational01::strong_conj(r(4, 5), r(9, 10)) == r(7, 10));
  CHECK(Rational01::strong_conj(r(1, 5), r(2, 5)) == Rational01::zero());
  CHECK(Rational01::implies(r(3, 7), r(3, 7)) == Rational01::one());
  CHECK(Rational01::implies(r(4, 5), r(7, 10)) == r(9, 10));
  CHECK(Rational01::zero().complement() == Rational01::one());
  CHECK(Rational01::strong_disj(r(3, 5), r(3, 5)) == Rational01::one());
  CHECK(Rational01::strong_disj(r(1, 5), r(2, 5)) == r(3, 5));
  CHECK(Rational01::min(r(1, 3), r(1, 2)) == r(1, 3));
  CHECK(Rational01::max(r(1, 3), r(1, 2)) == r(1, 2));
  CHECK(Rational01::equiv(r(1, 2), r(1, 2)) == Rational01::one());
  // 1 - |x-y|
  CHECK(Rational01::equiv(r(4, 5), r(3, 10)) == r(1, 2));
  CHECK(Rational01::product(r(3, 5), r(4, 5)) == r(12, 25));
}

TEST_CASE("display forms") {
  CHECK(Rational01::of(4, 5).display() == "4/5 (0.8)");
  CHECK(Rational01::zero().display() == "0/1 (0)");
  CHECK(Rational01::one().display() == "1/1 (1)");
  CHECK(Rational01::of(63, 250).to_decimal() == "0.252");
  CHECK(Rational01::of(1, 3).to_decimal() == "~0.333333");
  CHECK(Rational01::of(1, 64).to_decimal() == "0.015625");
}
