#pragma once

#include <string>

#include "hf/const_expr.hpp"

namespace hf {

// Argument n + offset with offset in {-1/2, +1/2, -3/2}.
struct HalfArg {
    long n = 0;
    enum Offset { MinusHalf, PlusHalf, MinusThreeHalves } offset = MinusHalf;

    Rational value() const {
        switch (offset) {
            case MinusHalf: return Rational(n) - Rational(1, 2);
            case PlusHalf: return Rational(n) + Rational(1, 2);
            case MinusThreeHalves: return Rational(n) - Rational(3, 2);
        }
        throw DomainError("HalfArg: bad offset");
    }
};

// H at a half-integer argument, exactly: H_{n-1/2} = 2 O_n - 2 ln 2 and its
// shifted companions. Requires n >= 0; arguments below -3/2 are rejected.
ConstExpr harmonic_half(const HalfArg& x);

// H^(2)_{n-1/2} = -pi^2/3 + 4 O_n^(2), n >= 0.
ConstExpr harmonic2_half(long n);

// The five closed-form binomial shapes at half-integer arguments.
enum class BinomialHalfShape {
    UpperPlusHalf,    // C(r+1/2, s) = C(2r+1,2s) C(r,s)^-1 2^-2s C(2s,s)
    UpperMinusHalf,   // C(r-1/2, s) = C(r,s) C(2r-2s,r-s)^-1 2^-2s C(2r,r)
    LowerHalf,        // C(r, 1/2)  = 2^{2r+1} / (pi C(2r,r))
    LowerMinusHalf,   // C(r, -1/2) = 2^{2r+1} / (pi (2r+1) C(2r,r))
    TopShifted,       // C(r-1/2, r+1) = -C(2r,r) / ((r+1) 2^{2r+1})
};

ConstExpr binomial_half(BinomialHalfShape shape, long r, long s = 0);

// Exact binomial dispatcher over every shape the catalog needs. Tries, in
// order: integer arguments, integer lower index (falling factorial), integer
// complement (via C(r,s) = C(r,r-s)), then the pi-valued half-integer lower
// shapes. Reports which rule fired so verification output stays auditable.
struct ExactBinomial {
    ConstExpr value;
    const char* rule;
};

ExactBinomial gen_binomial_exact_traced(const Rational& r, const Rational& s);
ConstExpr gen_binomial_exact(const Rational& r, const Rational& s);

}  // namespace hf
