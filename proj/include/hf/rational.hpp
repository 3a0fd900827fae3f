#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "hf/errors.hpp"

namespace hf {

using Integer = mpz_class;

// Exact rational number. Always stored in lowest terms with a positive
// denominator; all arithmetic is exact. Backed by GMP.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(int n) : v_(n) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw DomainError("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Parses "p", "-p", or "p/q".
    static Rational from_string(std::string_view s);

    const Integer& num() const { return v_.get_num(); }
    const Integer& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_nonneg_integer() const { return is_integer() && sgn(v_) >= 0; }
    // True when 2x is an odd integer.
    bool is_half_integer() const { return v_.get_den() == 2; }
    int sign() const { return sgn(v_); }

    // Value as long; caller must know it fits.
    long to_long() const {
        if (!is_integer() || !v_.get_num().fits_slong_p())
            throw DomainError("Rational: not a (small) integer: " + to_string());
        return v_.get_num().get_si();
    }

    Integer floor() const {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return q;
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw DomainError("Rational: division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        int c = cmp(v_, o.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational reciprocal() const {
        if (is_zero()) throw DomainError("Rational: reciprocal of zero");
        return Rational(mpq_class(1 / v_));
    }

    Rational pow(long e) const {
        if (e < 0) return reciprocal().pow(-e);
        Rational r(1), base(*this);
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    // "25/12", "-3", "0"
    std::string to_string() const;
    // Truncated decimal expansion, for human-format output only.
    std::string to_decimal(int digits) const;

    double to_double() const { return v_.get_d(); }

private:
    mpq_class v_;
};

inline Rational operator+(long a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(long a, const Rational& b) { return Rational(a) - b; }
inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }
inline Rational operator/(long a, const Rational& b) { return Rational(a) / b; }

// 2^e as an exact rational (e may be negative).
Rational pow2(long e);

// (-1)^k
inline Rational neg1pow(long k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace hf
