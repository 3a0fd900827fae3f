#include <doctest.h>

#include <random>

#include "hf/const_expr.hpp"
#include "hf/enclosures.hpp"

using hf::ConstExpr;
using hf::Interval;
using hf::Rational;

namespace {

ConstExpr ln2() { return ConstExpr::ln2_sym(); }
ConstExpr pi() { return ConstExpr::pi_sym(); }

// random element with monomials low enough that products stay inside the box
ConstExpr random_small(std::mt19937_64& rng) {
    ConstExpr e;
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> pi_pow(-1, 1);
    for (int a = 0; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b) {
            int c = coeff(rng);
            if (c != 0) e = e + ConstExpr::monomial(a, b, Rational(c, 1 + (a + b + 2) % 3));
        }
    return e;
}

}  // namespace

TEST_CASE("embedding and equality") {
    CHECK(ConstExpr(Rational(0)).is_zero());
    CHECK(ConstExpr(Rational(0)).terms().empty());
    CHECK(ConstExpr(Rational(3, 2)).as_rational() == Rational(3, 2));
    CHECK(ConstExpr(Rational(-1)).to_string() == "-1");
    CHECK(hf::ce_from_rational(Rational(5, 6)) == ConstExpr(Rational(5, 6)));
}

TEST_CASE("ring products and the exponent box") {
    // (1 + ln2)(1 - ln2) = 1 - ln2^2
    ConstExpr lhs = (ConstExpr(1) + ln2()) * (ConstExpr(1) - ln2());
    CHECK(lhs == ConstExpr(1) - ln2() * ln2());
    // additive inverse
    CHECK((ConstExpr(Rational(5, 6)) + ConstExpr(Rational(-5, 6))).is_zero());
    // (4/pi)(pi/2) = 2: exponent arithmetic cancels pi
    ConstExpr four_over_pi = ConstExpr::monomial(0, -1, Rational(4));
    ConstExpr half_pi = ConstExpr::monomial(0, 1, Rational(1, 2));
    CHECK(four_over_pi * half_pi == ConstExpr(2));
    // leaving the box is an error, not silent widening
    ConstExpr ln2sq = ln2() * ln2();
    CHECK_THROWS_AS(ln2sq * ln2(), hf::RingOverflowError);
    ConstExpr pisq = pi() * pi();
    CHECK_THROWS_AS(pisq * pi(), hf::RingOverflowError);
    CHECK_THROWS_AS(ConstExpr::monomial(3, 0, Rational(1)), hf::RingOverflowError);
}

TEST_CASE("monomial division") {
    CHECK(ConstExpr::monomial(0, 1, Rational(2)) / pi() == ConstExpr(2));
    ConstExpr x = ConstExpr(4) - ln2() * Rational(4);
    CHECK(x / ConstExpr(2) == ConstExpr(2) - ln2() * Rational(2));
    ConstExpr four_over_pi = ConstExpr::monomial(0, -1, Rational(4));
    CHECK(ConstExpr(1) / four_over_pi == ConstExpr::monomial(0, 1, Rational(1, 4)));
    CHECK_THROWS_AS(ConstExpr(1) / ConstExpr(Rational(0)), hf::DomainError);
    CHECK_THROWS_AS(ConstExpr(1) / (ConstExpr(1) + ln2()), hf::DomainError);
    // exactly inverse to multiplication by the same monomial
    std::mt19937_64 rng(42);
    for (int i = 0; i < 50; ++i) {
        ConstExpr v = random_small(rng);
        ConstExpr d = ConstExpr::monomial(1, -1, Rational(3, 7));
        CHECK((v * d) / d == v);
    }
}

TEST_CASE("ring axioms on sampled triples") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        ConstExpr a = random_small(rng), b = random_small(rng), c = random_small(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
    // associativity of products needs degree-0 middle factors to stay in-box
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int i = 0; i < 100; ++i) {
        ConstExpr a = random_small(rng);
        ConstExpr b = ConstExpr(Rational(coeff(rng), 5));
        ConstExpr c = random_small(rng);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("canonical rendering") {
    ConstExpr e = ConstExpr(Rational(5, 6)) - ln2() * Rational(2) +
                  ConstExpr::monomial(0, 2, Rational(1, 3));
    CHECK(e.to_string() == "5/6 - 2*ln2 + 1/3*pi^2");
    CHECK(ConstExpr().to_string() == "0");
    CHECK((ConstExpr(2) - ln2() * Rational(2)).to_string() == "2 - 2*ln2");
    CHECK(ConstExpr::monomial(0, -1, Rational(4)).to_string() == "4*pi^-1");
    CHECK(ConstExpr::monomial(1, 1, Rational(1)).to_string() == "ln2*pi");
}

TEST_CASE("interval evaluation of ring elements") {
    Rational eps = hf::pow2(-40);
    CHECK(ConstExpr().eval_interval(eps).is_point());
    CHECK(ConstExpr().eval_interval(eps).contains(Rational(0)));

    Interval two_minus_2ln2 = (ConstExpr(2) - ln2() * Rational(2)).eval_interval(eps);
    CHECK(two_minus_2ln2.width() <= eps);
    CHECK(two_minus_2ln2.mid().to_decimal(10).substr(0, 12) == "0.6137056388");

    Interval pi_sq = (pi() * pi()).eval_interval(eps);
    CHECK(pi_sq.width() <= eps);
    CHECK(pi_sq.mid().to_decimal(10).substr(0, 12) == "9.8696044010");
}

TEST_CASE("interval evaluation: containment and nesting on random elements") {
    std::mt19937_64 rng(20240809);
    for (int i = 0; i < 100; ++i) {
        ConstExpr e = random_small(rng);
        Interval coarse = e.eval_interval(hf::pow2(-30));
        Interval fine = e.eval_interval(hf::pow2(-90));
        CHECK(coarse.contains(fine));
        CHECK(hf::enclosure_contains(coarse, e));
        CHECK(hf::enclosure_contains(fine, e));
        CHECK(fine.width() <= hf::pow2(-90));
    }
    // bulk pass: width always met and a much finer reference always contained
    for (int i = 0; i < 10000; ++i) {
        ConstExpr e = random_small(rng);
        Interval enc = e.eval_interval(hf::pow2(-48));
        Interval ref = e.eval_interval(hf::pow2(-120));
        CHECK(enc.width() <= hf::pow2(-48));
        CHECK(enc.contains(ref));
    }
}
