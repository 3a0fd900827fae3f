#pragma once

#include <map>
#include <string>

#include "hf/rational.hpp"

namespace hf {

class Interval;

// Monomial ln2^a * pi^b with 0 <= a <= 2 and -2 <= b <= 2. Products that
// leave this box throw RingOverflowError rather than widening it silently.
struct Monomial {
    int ln2_pow = 0;
    int pi_pow = 0;

    static constexpr int kMaxLn2 = 2;
    static constexpr int kMaxPiAbs = 2;

    static bool in_box(int a, int b) {
        return a >= 0 && a <= kMaxLn2 && b >= -kMaxPiAbs && b <= kMaxPiAbs;
    }
    bool operator==(const Monomial& o) const = default;
    int degree() const { return ln2_pow + (pi_pow < 0 ? -pi_pow : pi_pow); }
    std::string to_string() const;  // "", "ln2", "pi^2", "ln2*pi^-1", ...
};

// Canonical term order: rational part first, then by total degree; matches
// the rendering "5/6 - 2*ln2 + 1/3*pi^2".
struct MonomialOrder {
    bool operator()(const Monomial& x, const Monomial& y) const {
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        if (x.ln2_pow != y.ln2_pow) return x.ln2_pow > y.ln2_pow;
        return x.pi_pow < y.pi_pow;
    }
};

// Element of the exact constant-extension ring: a finite rational-linear
// combination of monomials ln2^a * pi^b. Equality is coefficient-wise, so
// identity instances at half-integer parameters verify exactly.
class ConstExpr {
public:
    ConstExpr() = default;
    explicit ConstExpr(const Rational& q) { add_term(Monomial{}, q); }
    explicit ConstExpr(long q) : ConstExpr(Rational(q)) {}

    static ConstExpr from_rational(const Rational& q) { return ConstExpr(q); }
    static ConstExpr ln2_sym() { return monomial(1, 0, Rational(1)); }
    static ConstExpr pi_sym() { return monomial(0, 1, Rational(1)); }
    static ConstExpr monomial(int ln2_pow, int pi_pow, const Rational& coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    // Rational part; throws if other monomials are present.
    Rational as_rational() const;
    // True when the expression is a single monomial.
    bool is_monomial() const { return terms_.size() == 1; }

    ConstExpr operator-() const;
    ConstExpr operator+(const ConstExpr& o) const;
    ConstExpr operator-(const ConstExpr& o) const;
    ConstExpr operator*(const ConstExpr& o) const;
    // Exact division by a single-monomial divisor; anything else throws
    // DomainError (division is not closed in the ring).
    ConstExpr operator/(const ConstExpr& d) const;

    ConstExpr operator*(const Rational& q) const;
    ConstExpr operator+(const Rational& q) const { return *this + ConstExpr(q); }
    ConstExpr operator-(const Rational& q) const { return *this - ConstExpr(q); }

    bool operator==(const ConstExpr& o) const { return terms_ == o.terms_; }

    // Guaranteed enclosure of the represented real number, width <= eps.
    Interval eval_interval(const Rational& eps) const;

    // Canonical text, e.g. "5/6 - 2*ln2 + 1/3*pi^2"; "0" for the zero element.
    std::string to_string() const;

    const std::map<Monomial, Rational, MonomialOrder>& terms() const { return terms_; }

private:
    void add_term(const Monomial& m, const Rational& c);
    std::map<Monomial, Rational, MonomialOrder> terms_;
};

inline ConstExpr ce_from_rational(const Rational& q) { return ConstExpr(q); }
inline ConstExpr ce_add(const ConstExpr& x, const ConstExpr& y) { return x + y; }
inline ConstExpr ce_mul(const ConstExpr& x, const ConstExpr& y) { return x * y; }
inline ConstExpr ce_div_monomial(const ConstExpr& x, const ConstExpr& d) { return x / d; }

}  // namespace hf
