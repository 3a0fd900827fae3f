#pragma once

#include "hf/const_expr.hpp"
#include "hf/interval.hpp"

namespace hf {

// Target width for a verified enclosure.
struct Precision {
    Rational eps;
    static Precision bits(long b) { return Precision{pow2(-b)}; }
};

// Refinement cap in bits. Defaults to 4096 or the HF_MAX_BITS environment
// variable; enclosure requests that would need deeper ladders throw
// PrecisionError.
long max_refinement_bits();
void set_max_refinement_bits(long bits);

// Verified constants.
Interval ln2_enclosure(const Precision& p);
Interval pi_enclosure(const Precision& p);
Interval zeta2_enclosure(const Precision& p);  // pi^2/6

// ln x for rational x > 0.
Interval log_enclosure(const Rational& x, const Precision& p);
// e^v hull over a rational interval.
Interval exp_enclosure(const Interval& v, const Precision& p);

// ln Gamma(x), x > 0, via argument shift plus the Stirling series with the
// remainder bounded by the first omitted Bernoulli term.
Interval lgamma_enclosure(const Rational& x, const Precision& p);

// psi(x); poles at x in {0, -1, -2, ...} raise PoleError. Negative
// non-integer arguments are handled by upward recurrence only.
Interval digamma_enclosure(const Rational& x, const Precision& p);

// psi^(j)(x) for j >= 1.
Interval polygamma_enclosure(int j, const Rational& x, const Precision& p);

// psi^(j)(a) - psi^(j)(b), j >= 0.
Interval polygamma_diff_enclosure(int j, const Rational& a, const Rational& b,
                                  const Precision& p);

// H_x = psi(x+1) - psi(1) and H_x^(2) = psi_1(1) - psi_1(x+1); gamma-free by
// construction.
Interval harmonic_enclosure(const Rational& x, const Precision& p);
Interval harmonic2_enclosure(const Rational& x, const Precision& p);

// Binomial C(r,s) as a Gamma ratio. Exact-evaluable shapes (integer lower
// index, integer complement) return point intervals; everything else goes
// through lgamma enclosures after shifting the three Gamma arguments positive.
Interval gen_binomial_enclosure(const Rational& r, const Rational& s, const Precision& p);
// Same value but always through the Gamma-ratio route; used to cross-validate
// exact closed forms against an independent evaluation path.
Interval gen_binomial_gamma_enclosure(const Rational& r, const Rational& s,
                                      const Precision& p);

// Decides whether the real number named by `exact` lies inside `enc`, by
// refining `exact`'s own enclosure until the question separates.
bool enclosure_contains(const Interval& enc, const ConstExpr& exact);

}  // namespace hf
