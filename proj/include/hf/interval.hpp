#pragma once

#include <string>

#include "hf/rational.hpp"

namespace hf {

// Closed interval with exact rational endpoints. Every operation returns an
// interval guaranteed to contain the exact real result; endpoints are exact,
// so no outward rounding is ever required for soundness.
class Interval {
public:
    Interval() : lo_(0), hi_(0) {}
    Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (lo_ > hi_) throw DomainError("Interval: lo > hi");
    }
    static Interval point(const Rational& q) { return Interval(q, q); }
    // Hull of a value and 0-or-that-value, used for enveloping series tails.
    static Interval hull_with_zero(const Rational& t) {
        return t.sign() >= 0 ? Interval(Rational(0), t) : Interval(t, Rational(0));
    }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational mid() const { return (lo_ + hi_) / Rational(2); }

    bool contains(const Rational& q) const { return lo_ <= q && q <= hi_; }
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool intersects(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }
    bool contains_zero() const { return contains(Rational(0)); }
    bool is_point() const { return lo_ == hi_; }

    // Intersection; the caller must know the intervals meet (enclosures of a
    // common real value always do).
    Interval intersect(const Interval& o) const {
        Rational lo = lo_ > o.lo_ ? lo_ : o.lo_;
        Rational hi = hi_ < o.hi_ ? hi_ : o.hi_;
        if (lo > hi) throw DomainError("Interval: empty intersection");
        return Interval(lo, hi);
    }
    Interval hull(const Interval& o) const {
        return Interval(lo_ < o.lo_ ? lo_ : o.lo_, hi_ > o.hi_ ? hi_ : o.hi_);
    }

    Interval operator-() const { return Interval(-hi_, -lo_); }
    Interval operator+(const Interval& o) const { return Interval(lo_ + o.lo_, hi_ + o.hi_); }
    Interval operator-(const Interval& o) const { return Interval(lo_ - o.hi_, hi_ - o.lo_); }
    Interval operator*(const Interval& o) const;
    // Division; divisor must not contain zero.
    Interval operator/(const Interval& o) const;

    Interval operator+(const Rational& q) const { return Interval(lo_ + q, hi_ + q); }
    Interval operator-(const Rational& q) const { return Interval(lo_ - q, hi_ - q); }
    Interval operator*(const Rational& q) const {
        return q.sign() >= 0 ? Interval(lo_ * q, hi_ * q) : Interval(hi_ * q, lo_ * q);
    }
    Interval operator/(const Rational& q) const {
        if (q.is_zero()) throw DomainError("Interval: division by zero rational");
        return *this * q.reciprocal();
    }

    Interval pow_int(long e) const;

    // Round endpoints outward onto the dyadic grid of step 2^-bits; containment
    // is preserved and endpoint sizes stay bounded.
    Interval outward_round(long bits) const;

    std::string to_string() const {
        return "[" + lo_.to_string() + ", " + hi_.to_string() + "]";
    }
    // Short human rendering: midpoint decimal plus width bound.
    std::string to_decimal(int digits) const;

private:
    Rational lo_, hi_;
};

inline Interval operator*(const Rational& q, const Interval& I) { return I * q; }

}  // namespace hf
