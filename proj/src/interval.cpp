#include "hf/interval.hpp"

namespace hf {

Interval Interval::operator*(const Interval& o) const {
    Rational a = lo_ * o.lo_, b = lo_ * o.hi_, c = hi_ * o.lo_, d = hi_ * o.hi_;
    Rational lo = a, hi = a;
    for (const Rational* p : {&b, &c, &d}) {
        if (*p < lo) lo = *p;
        if (*p > hi) hi = *p;
    }
    return Interval(lo, hi);
}

Interval Interval::operator/(const Interval& o) const {
    if (o.contains_zero())
        throw DomainError("Interval: division by interval containing zero");
    Rational rlo = o.hi_.reciprocal(), rhi = o.lo_.reciprocal();
    if (rlo > rhi) std::swap(rlo, rhi);
    return *this * Interval(rlo, rhi);
}

Interval Interval::pow_int(long e) const {
    if (e == 0) return Interval::point(Rational(1));
    if (e < 0) return Interval::point(Rational(1)) / pow_int(-e);
    if (e % 2 == 0 && contains_zero()) {
        Rational m = lo_.abs() > hi_.abs() ? lo_.abs() : hi_.abs();
        return Interval(Rational(0), m.pow(e));
    }
    Rational a = lo_.pow(e), b = hi_.pow(e);
    return a <= b ? Interval(a, b) : Interval(b, a);
}

Interval Interval::outward_round(long bits) const {
    Rational scale = pow2(bits);
    Rational lo = Rational((lo_ * scale).floor()) / scale;
    Rational hi_scaled = hi_ * scale;
    Integer ceil = hi_scaled.floor();
    if (Rational(ceil) != hi_scaled) ceil += 1;
    return Interval(lo, Rational(ceil) / scale);
}

std::string Interval::to_decimal(int digits) const {
    return mid().to_decimal(digits) + " +/- " + width().to_decimal(6);
}

}  // namespace hf
