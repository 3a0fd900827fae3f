#include "hf/sequences.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace hf {

Rational Rational::from_string(std::string_view s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(Integer(std::string(s), 10));
        }
        Integer num(std::string(s.substr(0, slash)), 10);
        Integer den(std::string(s.substr(slash + 1)), 10);
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw DomainError("Rational: cannot parse '" + std::string(s) + "'");
    }
}

std::string Rational::to_string() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) {
        s += "/";
        s += v_.get_den().get_str();
    }
    return s;
}

std::string Rational::to_decimal(int digits) const {
    Integer n = v_.get_num(), d = v_.get_den();
    std::string out;
    if (sgn(n) < 0) {
        out += "-";
        n = -n;
    }
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    out += q.get_str();
    if (r != 0 && digits > 0) {
        out += ".";
        for (int i = 0; i < digits && r != 0; ++i) {
            r *= 10;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
            out += q.get_str();
        }
        if (r != 0) out += "...";
    }
    return out;
}

Rational pow2(long e) {
    Integer p(1);
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rational(p) : Rational(Integer(1), p);
}

namespace {

// Extend-on-demand caches. Values are returned by copy; the mutex only guards
// vector growth.
class PrefixCache {
public:
    template <class Extend>
    Rational get(long n, Extend extend) {
        std::lock_guard<std::mutex> lock(mu_);
        while (static_cast<long>(vals_.size()) <= n) extend(vals_);
        return vals_[static_cast<size_t>(n)];
    }

private:
    std::mutex mu_;
    std::vector<Rational> vals_;
};

PrefixCache g_harmonic;
PrefixCache g_odd;
PrefixCache g_odd2;
std::mutex g_gen_mu;
std::map<int, std::vector<Rational>> g_gen;
std::mutex g_bern_mu;
std::vector<Rational> g_bern;

}  // namespace

Rational harmonic(long n) {
    if (n < 0) throw DomainError("harmonic: negative index");
    return g_harmonic.get(n, [](std::vector<Rational>& v) {
        if (v.empty()) { v.push_back(Rational(0)); return; }
        long k = static_cast<long>(v.size());
        v.push_back(v.back() + Rational(1, k));
    });
}

Rational gen_harmonic(long n, int r) {
    if (n < 0 || r < 1) throw DomainError("gen_harmonic: bad arguments");
    std::lock_guard<std::mutex> lock(g_gen_mu);
    auto& v = g_gen[r];
    if (v.empty()) v.push_back(Rational(0));
    while (static_cast<long>(v.size()) <= n) {
        long k = static_cast<long>(v.size());
        v.push_back(v.back() + Rational(1, k).pow(r));
    }
    return v[static_cast<size_t>(n)];
}

Rational odd_harmonic(long n) {
    if (n < 0) throw DomainError("odd_harmonic: negative index");
    return g_odd.get(n, [](std::vector<Rational>& v) {
        if (v.empty()) { v.push_back(Rational(0)); return; }
        long k = static_cast<long>(v.size());
        v.push_back(v.back() + Rational(1, 2 * k - 1));
    });
}

Rational odd_gen_harmonic2(long n) {
    if (n < 0) throw DomainError("odd_gen_harmonic2: negative index");
    return g_odd2.get(n, [](std::vector<Rational>& v) {
        if (v.empty()) { v.push_back(Rational(0)); return; }
        long k = static_cast<long>(v.size());
        v.push_back(v.back() + Rational(1, (2 * k - 1) * (2 * k - 1)));
    });
}

Rational bernoulli(long n) {
    if (n < 0) throw DomainError("bernoulli: negative index");
    std::lock_guard<std::mutex> lock(g_bern_mu);
    // B_m = -1/(m+1) * sum_{k=0..m-1} C(m+1,k) B_k
    while (static_cast<long>(g_bern.size()) <= n) {
        long m = static_cast<long>(g_bern.size());
        if (m == 0) { g_bern.push_back(Rational(1)); continue; }
        Rational s(0);
        for (long k = 0; k < m; ++k) {
            Integer c;
            mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(m + 1),
                         static_cast<unsigned long>(k));
            s += Rational(c) * g_bern[static_cast<size_t>(k)];
        }
        g_bern.push_back(-s / Rational(m + 1));
    }
    return g_bern[static_cast<size_t>(n)];
}

Integer factorial(long n) {
    if (n < 0) throw DomainError("factorial: negative argument");
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

Rational binomial_int(long n, long k) {
    if (k < 0) return Rational(0);
    if (n >= 0) {
        if (k > n) return Rational(0);
        Integer c;
        mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n),
                     static_cast<unsigned long>(k));
        return Rational(c);
    }
    // C(n,k) = (-1)^k C(k-n-1, k) for n < 0
    return neg1pow(k) * binomial_int(k - n - 1, k);
}

Rational gen_binomial_rational_lower(const Rational& r, long s) {
    if (s < 0) throw DomainError("gen_binomial_rational_lower: s < 0");
    Rational prod(1);
    for (long i = 0; i < s; ++i) prod *= r - Rational(i);
    return prod / Rational(factorial(s));
}

Rational harmonic_value(const HarmonicKind& kind, long n) {
    switch (kind.family) {
        case HarmonicKind::H: return harmonic(n);
        case HarmonicKind::HGen: return gen_harmonic(n, kind.order);
        case HarmonicKind::O: return odd_harmonic(n);
        case HarmonicKind::O2: return odd_gen_harmonic2(n);
    }
    throw DomainError("harmonic_value: bad family");
}

}  // namespace hf
