#pragma once

#include <functional>
#include <optional>
#include <string>

#include "hf/const_expr.hpp"
#include "hf/enclosures.hpp"
#include "hf/half_integer.hpp"
#include "hf/interval.hpp"
#include "hf/sequences.hpp"

namespace hf {

// One bound instance of an identity's parameters.
struct Binding {
    long n = 0;
    std::optional<Rational> b;
    std::optional<Rational> c;
    std::optional<long> m;

    const Rational& b_val() const {
        if (!b) throw DomainError("binding: b not set");
        return *b;
    }
    const Rational& c_val() const {
        if (!c) throw DomainError("binding: c not set");
        return *c;
    }
    long m_val() const {
        if (!m) throw DomainError("binding: m not set");
        return *m;
    }
    std::string to_string() const;
    bool operator==(const Binding&) const = default;
};

// Canonical binding order: n, then b, then c, then m.
bool binding_less(const Binding& x, const Binding& y);

// The three value backends share one summand/closed-form notation: identity
// code is written as a generic lambda over a context `c` and instantiated for
// each backend. Contexts supply the non-ring-closed operations (harmonic
// values at rational arguments, general binomials, the named constants);
// plain +,-,* on values stay native.

struct RatCtx {
    using value_type = Rational;

    Rational embed(const Rational& q) const { return q; }
    Rational harmonic(const Rational& x) const {
        if (!x.is_integer())
            throw UnsupportedError("exact-rational backend: H at non-integer " + x.to_string());
        if (x.sign() < 0) throw PoleError("harmonic at negative integer " + x.to_string());
        return hf::harmonic(x.to_long());
    }
    Rational harmonic2(const Rational& x) const {
        if (!x.is_integer())
            throw UnsupportedError("exact-rational backend: H2 at non-integer " + x.to_string());
        if (x.sign() < 0) throw PoleError("harmonic2 at negative integer " + x.to_string());
        return gen_harmonic(x.to_long(), 2);
    }
    Rational binom(const Rational& r, const Rational& s) const {
        ConstExpr v = gen_binomial_exact(r, s);
        if (!v.is_rational())
            throw UnsupportedError("exact-rational backend: irrational binomial C(" +
                                   r.to_string() + ", " + s.to_string() + ")");
        return v.as_rational();
    }
    Rational ln2() const { throw UnsupportedError("exact-rational backend: ln2"); }
    Rational pi() const { throw UnsupportedError("exact-rational backend: pi"); }
    Rational zeta2() const { throw UnsupportedError("exact-rational backend: zeta(2)"); }
    static Rational div(const Rational& a, const Rational& b) { return a / b; }
};

struct RingCtx {
    using value_type = ConstExpr;

    ConstExpr embed(const Rational& q) const { return ConstExpr(q); }
    ConstExpr harmonic(const Rational& x) const {
        if (x.is_integer()) {
            if (x.sign() < 0) throw PoleError("harmonic at negative integer " + x.to_string());
            return ConstExpr(hf::harmonic(x.to_long()));
        }
        if (x.is_half_integer()) {
            Rational nq = x + Rational(1, 2);
            if (nq.sign() >= 0) return harmonic_half({nq.to_long(), HalfArg::MinusHalf});
            if (x == Rational(-3, 2)) return harmonic_half({0, HalfArg::MinusThreeHalves});
        }
        throw UnsupportedError("ring backend: H at unsupported argument " + x.to_string());
    }
    ConstExpr harmonic2(const Rational& x) const {
        if (x.is_integer()) {
            if (x.sign() < 0) throw PoleError("harmonic2 at negative integer " + x.to_string());
            return ConstExpr(gen_harmonic(x.to_long(), 2));
        }
        if (x.is_half_integer()) {
            Rational nq = x + Rational(1, 2);
            if (nq.sign() >= 0) return harmonic2_half(nq.to_long());
            // H2_{-3/2} = H2_{-1/2} - 1/(-1/2)^2
            if (x == Rational(-3, 2)) return harmonic2_half(0) - ConstExpr(Rational(4));
        }
        throw UnsupportedError("ring backend: H2 at unsupported argument " + x.to_string());
    }
    ConstExpr binom(const Rational& r, const Rational& s) const {
        return gen_binomial_exact(r, s);
    }
    ConstExpr ln2() const { return ConstExpr::ln2_sym(); }
    ConstExpr pi() const { return ConstExpr::pi_sym(); }
    ConstExpr zeta2() const { return ConstExpr::monomial(0, 2, Rational(1, 6)); }
    static ConstExpr div(const ConstExpr& a, const ConstExpr& b) { return a / b; }
};

struct IvalCtx {
    long bits = 64;

    using value_type = Interval;
    Precision prec() const { return Precision::bits(bits); }

    Interval embed(const Rational& q) const { return Interval::point(q); }
    Interval harmonic(const Rational& x) const {
        if (x.is_nonneg_integer()) return Interval::point(hf::harmonic(x.to_long()));
        return harmonic_enclosure(x, prec());
    }
    Interval harmonic2(const Rational& x) const {
        if (x.is_nonneg_integer()) return Interval::point(gen_harmonic(x.to_long(), 2));
        return harmonic2_enclosure(x, prec());
    }
    Interval binom(const Rational& r, const Rational& s) const {
        return gen_binomial_enclosure(r, s, prec());
    }
    Interval ln2() const { return ln2_enclosure(prec()); }
    Interval pi() const { return pi_enclosure(prec()); }
    Interval zeta2() const { return zeta2_enclosure(prec()); }
    static Interval div(const Interval& a, const Interval& b) { return a / b; }
};

// Backend-generic closures: a generic lambda converts to all three signatures.
struct ValueFn {
    std::function<Rational(RatCtx&, const Binding&)> rat;
    std::function<ConstExpr(RingCtx&, const Binding&)> ring;
    std::function<Interval(IvalCtx&, const Binding&)> ival;

    ValueFn() = default;
    template <class F>
    ValueFn(F f) : rat(f), ring(f), ival(f) {}
};

struct SummandFn {
    std::function<Rational(RatCtx&, const Binding&, long)> rat;
    std::function<ConstExpr(RingCtx&, const Binding&, long)> ring;
    std::function<Interval(IvalCtx&, const Binding&, long)> ival;

    SummandFn() = default;
    template <class F>
    SummandFn(F f) : rat(f), ring(f), ival(f) {}
};

template <class Ctx>
typename Ctx::value_type call_value(const ValueFn& fn, Ctx& ctx, const Binding& t) {
    if constexpr (std::is_same_v<Ctx, RatCtx>) return fn.rat(ctx, t);
    else if constexpr (std::is_same_v<Ctx, RingCtx>) return fn.ring(ctx, t);
    else return fn.ival(ctx, t);
}

template <class Ctx>
typename Ctx::value_type call_summand(const SummandFn& fn, Ctx& ctx, const Binding& t, long k) {
    if constexpr (std::is_same_v<Ctx, RatCtx>) return fn.rat(ctx, t, k);
    else if constexpr (std::is_same_v<Ctx, RingCtx>) return fn.ring(ctx, t, k);
    else return fn.ival(ctx, t, k);
}

}  // namespace hf
