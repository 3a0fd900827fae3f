#include <doctest.h>

#include "hf/sequences.hpp"

using hf::Integer;
using hf::Rational;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, -2).den() == 2);
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational(0, 7).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), hf::DomainError);
}

TEST_CASE("rational arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK_THROWS_AS(a / Rational(0), hf::DomainError);
    CHECK(Rational(2, 3) < Rational(3, 4));
    CHECK(Rational(5, 10) == Rational(1, 2));
}

TEST_CASE("rational strings") {
    CHECK(Rational(25, 12).to_string() == "25/12");
    CHECK(Rational(-3).to_string() == "-3");
    CHECK(Rational::from_string("25/12") == Rational(25, 12));
    CHECK(Rational::from_string("-7/2") == Rational(-7, 2));
    CHECK(Rational::from_string("41") == Rational(41));
    CHECK_THROWS_AS(Rational::from_string("x/y"), hf::DomainError);
    CHECK(Rational(25, 12).to_decimal(6) == "2.083333...");
    CHECK(Rational(-1, 4).to_decimal(4) == "-0.25");
}

TEST_CASE("rational powers and helpers") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2).pow(-2) == Rational(1, 4));
    CHECK_THROWS_AS(Rational(0).pow(-1), hf::DomainError);
    CHECK(hf::pow2(-3) == Rational(1, 8));
    CHECK(hf::pow2(5) == Rational(32));
    CHECK(hf::neg1pow(4) == Rational(1));
    CHECK(hf::neg1pow(7) == Rational(-1));
    CHECK(Rational(7, 2).is_half_integer());
    CHECK(!Rational(7, 3).is_half_integer());
    CHECK(Rational(-9, 4).floor() == Integer(-3));
}
