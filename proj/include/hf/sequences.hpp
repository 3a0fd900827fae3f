#pragma once

#include <string>

#include "hf/rational.hpp"

namespace hf {

// Exact integer-index sequences. All functions memoize internally and are
// safe to call from concurrent verification workers.

// H_n = sum_{k=1..n} 1/k, H_0 = 0.
Rational harmonic(long n);

// H_n^{(r)} = sum_{j=1..n} 1/j^r, r >= 1.
Rational gen_harmonic(long n, int r);

// O_n = sum_{k=1..n} 1/(2k-1).
Rational odd_harmonic(long n);

// O_n^{(2)} = sum_{k=1..n} 1/(2k-1)^2.
Rational odd_gen_harmonic2(long n);

// n-th Bernoulli number, convention B_1 = -1/2.
Rational bernoulli(long n);

Integer factorial(long n);

// Integer binomial with the falling-factorial extension: C(n,k) = 0 for k < 0
// or (n >= 0 and k > n); for n < 0, C(n,k) = (-1)^k C(k-n-1, k).
Rational binomial_int(long n, long k);

// C(r,s) = r(r-1)...(r-s+1)/s! for rational r and integer s >= 0.
Rational gen_binomial_rational_lower(const Rational& r, long s);

// One of the four harmonic-number families at integer index.
struct HarmonicKind {
    enum Family { H, HGen, O, O2 } family = H;
    int order = 1;  // 1 for H and O, 2 for O2, r for HGen
};

Rational harmonic_value(const HarmonicKind& kind, long n);

}  // namespace hf
