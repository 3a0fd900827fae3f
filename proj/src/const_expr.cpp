#include "hf/const_expr.hpp"

#include "hf/errors.hpp"

namespace hf {

std::string Monomial::to_string() const {
    std::string s;
    if (ln2_pow > 0) {
        s += "ln2";
        if (ln2_pow > 1) s += "^" + std::to_string(ln2_pow);
    }
    if (pi_pow != 0) {
        if (!s.empty()) s += "*";
        s += "pi";
        if (pi_pow != 1) s += "^" + std::to_string(pi_pow);
    }
    return s;
}

ConstExpr ConstExpr::monomial(int ln2_pow, int pi_pow, const Rational& coeff) {
    if (!Monomial::in_box(ln2_pow, pi_pow))
        throw RingOverflowError("ConstExpr: monomial outside the exponent box");
    ConstExpr e;
    e.add_term(Monomial{ln2_pow, pi_pow}, coeff);
    return e;
}

void ConstExpr::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool ConstExpr::is_rational() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Monomial{};
}

Rational ConstExpr::as_rational() const {
    if (terms_.empty()) return Rational(0);
    if (!is_rational())
        throw DomainError("ConstExpr: not a rational value: " + to_string());
    return terms_.begin()->second;
}

ConstExpr ConstExpr::operator-() const {
    ConstExpr r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

ConstExpr ConstExpr::operator+(const ConstExpr& o) const {
    ConstExpr r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

ConstExpr ConstExpr::operator-(const ConstExpr& o) const {
    ConstExpr r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

ConstExpr ConstExpr::operator*(const ConstExpr& o) const {
    ConstExpr r;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            int a = m1.ln2_pow + m2.ln2_pow;
            int b = m1.pi_pow + m2.pi_pow;
            if (!Monomial::in_box(a, b))
                throw RingOverflowError("ConstExpr: product leaves the exponent box (" +
                                        to_string() + ") * (" + o.to_string() + ")");
            r.add_term(Monomial{a, b}, c1 * c2);
        }
    }
    return r;
}

ConstExpr ConstExpr::operator*(const Rational& q) const {
    ConstExpr r;
    if (q.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * q);
    return r;
}

ConstExpr ConstExpr::operator/(const ConstExpr& d) const {
    if (d.is_zero()) throw DomainError("ConstExpr: division by zero");
    if (!d.is_monomial())
        throw DomainError("ConstExpr: divisor is not a single monomial: " + d.to_string());
    const auto& [dm, dc] = *d.terms_.begin();
    ConstExpr r;
    for (const auto& [m, c] : terms_) {
        int a = m.ln2_pow - dm.ln2_pow;
        int b = m.pi_pow - dm.pi_pow;
        if (!Monomial::in_box(a, b))
            throw RingOverflowError("ConstExpr: quotient leaves the exponent box");
        r.add_term(Monomial{a, b}, c / dc);
    }
    return r;
}

std::string ConstExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) s += "-";
            first = false;
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        std::string mono = m.to_string();
        if (mono.empty()) {
            s += mag.to_string();
        } else if (mag == Rational(1)) {
            s += mono;
        } else {
            s += mag.to_string() + "*" + mono;
        }
    }
    return s;
}

}  // namespace hf
