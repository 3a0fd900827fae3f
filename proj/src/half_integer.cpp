#include "hf/half_integer.hpp"

#include "hf/sequences.hpp"

namespace hf {

namespace {

ConstExpr two_ln2() { return ConstExpr::monomial(1, 0, Rational(2)); }

}  // namespace

ConstExpr harmonic_half(const HalfArg& x) {
    if (x.n < 0)
        throw UnsupportedError("harmonic_half: n must be non-negative, got n = " +
                               std::to_string(x.n));
    switch (x.offset) {
        case HalfArg::MinusHalf:
            return ConstExpr(Rational(2) * odd_harmonic(x.n)) - two_ln2();
        case HalfArg::PlusHalf:
            return ConstExpr(Rational(2) * odd_harmonic(x.n + 1)) - two_ln2();
        case HalfArg::MinusThreeHalves:
            // H_{n-3/2} = H_{n-1/2} - 1/(n-1/2)
            return ConstExpr(Rational(2) * odd_harmonic(x.n) - Rational(2, 2 * x.n - 1)) -
                   two_ln2();
    }
    throw DomainError("harmonic_half: bad offset");
}

ConstExpr harmonic2_half(long n) {
    if (n < 0) throw UnsupportedError("harmonic2_half: n must be non-negative");
    return ConstExpr::monomial(0, 2, Rational(-1, 3)) +
           ConstExpr(Rational(4) * odd_gen_harmonic2(n));
}

ConstExpr binomial_half(BinomialHalfShape shape, long r, long s) {
    switch (shape) {
        case BinomialHalfShape::UpperPlusHalf:
            if (!(0 <= s && s <= r))
                throw DomainError("binomial_half: UpperPlusHalf needs 0 <= s <= r");
            return ConstExpr(binomial_int(2 * r + 1, 2 * s) / binomial_int(r, s) *
                             pow2(-2 * s) * binomial_int(2 * s, s));
        case BinomialHalfShape::UpperMinusHalf:
            if (!(0 <= s && s <= r))
                throw DomainError("binomial_half: UpperMinusHalf needs 0 <= s <= r");
            return ConstExpr(binomial_int(r, s) / binomial_int(2 * r - 2 * s, r - s) *
                             pow2(-2 * s) * binomial_int(2 * r, r));
        case BinomialHalfShape::LowerHalf:
            if (r < 0) throw DomainError("binomial_half: LowerHalf needs r >= 0");
            return ConstExpr::monomial(0, -1, pow2(2 * r + 1) / binomial_int(2 * r, r));
        case BinomialHalfShape::LowerMinusHalf:
            if (r < 0) throw DomainError("binomial_half: LowerMinusHalf needs r >= 0");
            return ConstExpr::monomial(
                0, -1, pow2(2 * r + 1) / (Rational(2 * r + 1) * binomial_int(2 * r, r)));
        case BinomialHalfShape::TopShifted:
            if (r < 0) throw DomainError("binomial_half: TopShifted needs r >= 0");
            return ConstExpr(Rational(-1, r + 1) * binomial_int(2 * r, r) * pow2(-(2 * r + 1)));
    }
    throw DomainError("binomial_half: bad shape");
}

ExactBinomial gen_binomial_exact_traced(const Rational& r, const Rational& s) {
    if (r.is_integer() && s.is_integer())
        return {ConstExpr(binomial_int(r.to_long(), s.to_long())), "integer"};
    if (s.is_integer()) {
        if (s.sign() < 0) return {ConstExpr(Rational(0)), "zero-lower"};
        return {ConstExpr(gen_binomial_rational_lower(r, s.to_long())), "falling-factorial"};
    }
    Rational comp = r - s;
    if (comp.is_integer()) {
        if (comp.sign() < 0) return {ConstExpr(Rational(0)), "zero-complement"};
        return {ConstExpr(gen_binomial_rational_lower(r, comp.to_long())),
                "falling-factorial-symmetric"};
    }
    if (r.is_integer() && r.sign() >= 0 && s == Rational(1, 2))
        return {binomial_half(BinomialHalfShape::LowerHalf, r.to_long()), "lower-half"};
    if (r.is_integer() && r.sign() >= 0 && s == Rational(-1, 2))
        return {binomial_half(BinomialHalfShape::LowerMinusHalf, r.to_long()),
                "lower-minus-half"};
    throw UnsupportedError("gen_binomial_exact: no exact rule for C(" + r.to_string() + ", " +
                           s.to_string() + ")");
}

ConstExpr gen_binomial_exact(const Rational& r, const Rational& s) {
    return gen_binomial_exact_traced(r, s).value;
}

}  // namespace hf
