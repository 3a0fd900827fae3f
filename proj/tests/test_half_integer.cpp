#include <doctest.h>

#include "hf/enclosures.hpp"
#include "hf/half_integer.hpp"
#include "hf/sequences.hpp"

using hf::BinomialHalfShape;
using hf::ConstExpr;
using hf::HalfArg;
using hf::Rational;
using namespace hf;

namespace {

ConstExpr two_ln2() { return ConstExpr::monomial(1, 0, Rational(2)); }

}  // namespace

TEST_CASE("harmonic values at half-integer arguments") {
    CHECK(harmonic_half({0, HalfArg::MinusHalf}) == -two_ln2());
    CHECK(harmonic_half({1, HalfArg::MinusHalf}) == ConstExpr(2) - two_ln2());
    CHECK(harmonic_half({2, HalfArg::PlusHalf}) == ConstExpr(Rational(46, 15)) - two_ln2());
    CHECK(harmonic_half({0, HalfArg::MinusThreeHalves}) == ConstExpr(2) - two_ln2());
    CHECK_THROWS_AS(harmonic_half({-1, HalfArg::MinusHalf}), hf::UnsupportedError);
}

TEST_CASE("second-order harmonic at n - 1/2") {
    ConstExpr neg_zeta_term = ConstExpr::monomial(0, 2, Rational(-1, 3));
    CHECK(harmonic2_half(0) == neg_zeta_term);
    CHECK(harmonic2_half(1) == ConstExpr(4) + neg_zeta_term);
    CHECK(harmonic2_half(2) == ConstExpr(Rational(40, 9)) + neg_zeta_term);
    CHECK_THROWS_AS(harmonic2_half(-1), hf::UnsupportedError);
}

TEST_CASE("all eight half-integer difference relations, n <= 100") {
    for (long n = 0; n <= 100; ++n) {
        ConstExpr h_minus = harmonic_half({n, HalfArg::MinusHalf});
        ConstExpr h_plus = harmonic_half({n, HalfArg::PlusHalf});
        ConstExpr h_m12 = harmonic_half({0, HalfArg::MinusHalf});
        ConstExpr h_12 = harmonic_half({1, HalfArg::MinusHalf});
        ConstExpr h_m32 = harmonic_half({0, HalfArg::MinusThreeHalves});
        Rational on = odd_harmonic(n), on1 = odd_harmonic(n + 1);
        CHECK(h_minus == ConstExpr(Rational(2) * on) - two_ln2());
        CHECK(h_minus - h_m12 == ConstExpr(Rational(2) * on));
        CHECK(h_minus - h_12 == ConstExpr(Rational(2) * (on - 1)));
        CHECK(h_plus - h_m12 == ConstExpr(Rational(2) * on1));
        CHECK(h_plus - h_12 == ConstExpr(Rational(2) * (on1 - 1)));
        CHECK(h_plus - h_minus == ConstExpr(Rational(2, 2 * n + 1)));
        CHECK(h_minus - h_m32 == ConstExpr(Rational(2) * (on - 1)));
        CHECK(h_plus - h_m32 == ConstExpr(Rational(2) * (on1 - 1)));
    }
}

TEST_CASE("closed-form binomial shapes") {
    CHECK(binomial_half(BinomialHalfShape::UpperPlusHalf, 2, 1) == ConstExpr(Rational(5, 2)));
    CHECK(binomial_half(BinomialHalfShape::UpperMinusHalf, 2, 1) == ConstExpr(Rational(3, 2)));
    CHECK(binomial_half(BinomialHalfShape::LowerHalf, 1, 0) ==
          ConstExpr::monomial(0, -1, Rational(4)));
    CHECK(binomial_half(BinomialHalfShape::LowerMinusHalf, 3, 0) ==
          ConstExpr::monomial(0, -1, Rational(32, 35)));
    CHECK(binomial_half(BinomialHalfShape::TopShifted, 1, 0) == ConstExpr(Rational(-1, 8)));
    CHECK_THROWS_AS(binomial_half(BinomialHalfShape::UpperPlusHalf, 2, 3), hf::DomainError);
    CHECK_THROWS_AS(binomial_half(BinomialHalfShape::LowerHalf, -1, 0), hf::DomainError);
}

TEST_CASE("closed forms agree with the falling-factorial route") {
    for (long r = 0; r <= 20; ++r) {
        for (long s = 0; s <= r; ++s) {
            Rational up = gen_binomial_rational_lower(Rational(2 * r + 1, 2), s);
            Rational dn = gen_binomial_rational_lower(Rational(2 * r - 1, 2), s);
            CHECK(binomial_half(BinomialHalfShape::UpperPlusHalf, r, s) == ConstExpr(up));
            CHECK(binomial_half(BinomialHalfShape::UpperMinusHalf, r, s) == ConstExpr(dn));
        }
        CHECK(binomial_half(BinomialHalfShape::TopShifted, r, 0) ==
              ConstExpr(gen_binomial_rational_lower(Rational(2 * r - 1, 2), r + 1)));
    }
}

TEST_CASE("exact dispatcher rules") {
    auto t1 = gen_binomial_exact_traced(Rational(4), Rational(2));
    CHECK(t1.value == ConstExpr(6));
    CHECK(std::string(t1.rule) == "integer");

    auto t2 = gen_binomial_exact_traced(Rational(5, 2), Rational(1));
    CHECK(t2.value == ConstExpr(Rational(5, 2)));
    CHECK(std::string(t2.rule) == "falling-factorial");

    auto t3 = gen_binomial_exact_traced(Rational(7, 2), Rational(1, 2));
    CHECK(std::string(t3.rule) == "falling-factorial-symmetric");
    CHECK(t3.value == ConstExpr(gen_binomial_rational_lower(Rational(7, 2), 3)));

    auto t4 = gen_binomial_exact_traced(Rational(3), Rational(-1, 2));
    CHECK(std::string(t4.rule) == "lower-minus-half");
    CHECK(t4.value == ConstExpr::monomial(0, -1, Rational(32, 35)));

    auto t5 = gen_binomial_exact_traced(Rational(3), Rational(1, 2));
    CHECK(std::string(t5.rule) == "lower-half");

    CHECK(gen_binomial_exact(Rational(1, 2), Rational(-3)) == ConstExpr(Rational(0)));
    CHECK(gen_binomial_exact(Rational(1, 2), Rational(7, 2)) == ConstExpr(Rational(0)));
    CHECK_THROWS_AS(gen_binomial_exact(Rational(1, 3), Rational(1, 5)),
                    hf::UnsupportedError);
}

TEST_CASE("every exact half-integer value sits inside its Gamma-route enclosure") {
    hf::Precision p = hf::Precision::bits(80);
    for (long r = 0; r <= 8; ++r) {
        for (long s = 0; s <= r; ++s) {
            CHECK(enclosure_contains(
                gen_binomial_gamma_enclosure(Rational(2 * r + 1, 2), Rational(s), p),
                binomial_half(BinomialHalfShape::UpperPlusHalf, r, s)));
        }
        CHECK(enclosure_contains(
            gen_binomial_gamma_enclosure(Rational(r), Rational(1, 2), p),
            binomial_half(BinomialHalfShape::LowerHalf, r, 0)));
        CHECK(enclosure_contains(
            gen_binomial_gamma_enclosure(Rational(r), Rational(-1, 2), p),
            binomial_half(BinomialHalfShape::LowerMinusHalf, r, 0)));
        CHECK(enclosure_contains(
            gen_binomial_gamma_enclosure(Rational(2 * r - 1, 2), Rational(r + 1), p),
            binomial_half(BinomialHalfShape::TopShifted, r, 0)));
    }
}
