#include "hf/enclosures.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>

#include "hf/sequences.hpp"

namespace hf {

namespace {

constexpr long kLadderStart = 16;

std::atomic<long> g_max_bits{0};

long read_max_bits() {
    if (const char* env = std::getenv("HF_MAX_BITS")) {
        long v = std::atol(env);
        if (v >= kLadderStart) return v;
    }
    return 4096;
}

long magnitude_bits(const Rational& q) {
    if (q.is_zero()) return 0;
    long nb = static_cast<long>(mpz_sizeinbase(q.num().get_mpz_t(), 2));
    long db = static_cast<long>(mpz_sizeinbase(q.den().get_mpz_t(), 2));
    return nb > db ? nb - db + 1 : 1;
}

long ladder_level(long p) {
    long q = kLadderStart;
    while (q < p) q *= 2;
    return q;
}

// Runs `raw` along the precision ladder, intersecting successive enclosures so
// results at finer eps nest inside results at coarser eps.
Interval refine_to(const Precision& prec, const std::function<Interval(long)>& raw) {
    long cap = max_refinement_bits();
    std::optional<Interval> acc;
    for (long p = kLadderStart; p <= cap; p *= 2) {
        Interval r = raw(p);
        acc = acc ? acc->intersect(r) : r;
        if (acc->width() <= prec.eps) return *acc;
    }
    throw PrecisionError("enclosure: target width not reached within " +
                         std::to_string(cap) + " bits");
}

// Cumulative ladder cache for function values; one entry per argument, one
// chained interval per level.
class LadderCache {
public:
    Interval get(int fn, int order, const Rational& x, long p,
                 const std::function<Interval(long)>& raw) {
        Entry& e = entry(fn, order, x);
        std::lock_guard<std::mutex> lock(e.mu);
        long level = ladder_level(p);
        std::optional<Interval> acc;
        for (long q = kLadderStart; q <= level; q *= 2) {
            auto it = e.cum.find(q);
            if (it != e.cum.end()) {
                acc = it->second;
                continue;
            }
            Interval r = raw(q);
            acc = acc ? acc->intersect(r) : r;
            e.cum.emplace(q, *acc);
        }
        return *acc;
    }

private:
    struct Entry {
        std::mutex mu;
        std::map<long, Interval> cum;
    };
    Entry& entry(int fn, int order, const Rational& x) {
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_tuple(fn, order, x.num().get_str(), x.den().get_str());
        auto& slot = store_[key];
        if (!slot) slot = std::make_unique<Entry>();
        return *slot;
    }
    std::mutex mu_;
    std::map<std::tuple<int, int, std::string, std::string>, std::unique_ptr<Entry>> store_;
};

LadderCache g_fn_cache;

enum FnTag { kLn2, kPi, kHalfLn2Pi, kDigamma, kPolygamma, kLgamma };

// ---------------------------------------------------------------------------
// ln 2 = sum_{k>=1} 1/(k 2^k); tail after N terms is below 2^-N/(N+1).

Interval ln2_raw(long p) {
    long n = p + 4;
    // fixed-point: accumulate floor/ceil of 2^w/(k 2^k)
    long w = p + 40;
    Integer lo(0), hi(0);
    for (long k = 1; k <= n; ++k) {
        Integer num(1);
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(w - k));
        Integer q, r;
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(),
                       static_cast<unsigned long>(k));
        lo += q;
        hi += q;
        if (r != 0) hi += 1;
    }
    Rational scale = pow2(-w);
    Interval s(Rational(lo) * scale, Rational(hi) * scale);
    Rational tail = pow2(-n) / Rational(n + 1);
    return (s + Interval(Rational(0), tail)).outward_round(p + 32);
}

Interval ln2_cum(long p) {
    return g_fn_cache.get(kLn2, 0, Rational(0), p, ln2_raw);
}

// ---------------------------------------------------------------------------
// pi via Machin: pi = 16 atan(1/5) - 4 atan(1/239), alternating series.

Interval arctan_inv(long q, long p) {
    Rational s(0);
    Rational qq = Rational(1, q * q);
    Rational u = Rational(1, q);
    Rational bound = pow2(-p);
    long j = 0;
    for (;;) {
        Rational term = u / Rational(2 * j + 1);
        if (j % 2 == 1) term = -term;
        if (term.abs() <= bound) return Interval::point(s) + Interval::hull_with_zero(term);
        s += term;
        u *= qq;
        ++j;
    }
}

Interval pi_raw(long p) {
    Interval a5 = arctan_inv(5, p + 8);
    Interval a239 = arctan_inv(239, p + 8);
    return (a5 * Rational(16) - a239 * Rational(4)).outward_round(p + 32);
}

Interval pi_cum(long p) {
    return g_fn_cache.get(kPi, 0, Rational(0), p, pi_raw);
}

// ---------------------------------------------------------------------------
// ln x for rational x > 0: reduce x = 2^e m with m in [3/4, 3/2), then
// ln m = 2 atanh(t), t = (m-1)/(m+1) in [-1/7, 1/5]. The power sequence is
// kept as a dyadically rounded enclosure so term sizes stay bounded.

Interval log_raw(const Rational& x, long p) {
    if (x.sign() <= 0) throw DomainError("log: non-positive argument");
    long e = static_cast<long>(mpz_sizeinbase(x.num().get_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(x.den().get_mpz_t(), 2));
    Rational m = x * pow2(-e);
    while (m < Rational(3, 4)) { m *= Rational(2); --e; }
    while (m >= Rational(3, 2)) { m /= Rational(2); ++e; }

    Rational t = (m - Rational(1)) / (m + Rational(1));
    long w = p + 40;
    Interval t2 = Interval::point(t * t).outward_round(w);
    Interval u = Interval::point(t).outward_round(w);
    Interval s = Interval::point(Rational(0));
    Rational bound = pow2(-(p + 4));
    long j = 0;
    Rational tail;
    for (;;) {
        // remaining sum bounded by |u| t^2 25/24 / (2j+3), since t^2 <= 1/25
        Rational umax = u.lo().abs() > u.hi().abs() ? u.lo().abs() : u.hi().abs();
        tail = umax * t2.hi() * Rational(25, 24) / Rational(2 * j + 3);
        s = (s + u / Rational(2 * j + 1)).outward_round(w);
        if (tail <= bound) break;
        u = (u * t2).outward_round(w);
        ++j;
    }
    Interval r = (s + Interval(-tail, tail)) * Rational(2);
    if (e != 0) {
        long ebits = 1;
        for (long a = std::labs(e); a > 0; a >>= 1) ++ebits;
        r = r + ln2_cum(p + 4 + ebits) * Rational(e);
    }
    return r.outward_round(p + 32);
}

// ln of an interval with positive rational endpoints.
Interval log_interval(const Interval& v, long p) {
    return Interval(log_raw(v.lo(), p + 2).lo(), log_raw(v.hi(), p + 2).hi());
}

Interval half_ln_2pi(long p) {
    return g_fn_cache.get(kHalfLn2Pi, 0, Rational(0), p, [](long q) {
        return ((ln2_cum(q + 4) + log_interval(pi_cum(q + 4), q + 4)) * Rational(1, 2))
            .outward_round(q + 32);
    });
}

// ---------------------------------------------------------------------------
// exp of a rational, by halving into |u| <= 1/2 and squaring back up; the
// series tail obeys |R_J| <= 2|u|^{J+1}/(J+1)!.

Interval exp_point(const Rational& q, long p) {
    long s = 0;
    Rational u = q;
    while (u.abs() > Rational(1, 2)) { u /= Rational(2); ++s; }
    long qbits = static_cast<long>(std::ceil(std::fabs(q.to_double()) * 1.4427)) + 2;
    long w = p + s + qbits + 16;
    Rational bound = pow2(-(p + s + qbits + 8));

    Interval ui = Interval::point(u).outward_round(w);
    Interval sum = Interval::point(Rational(1));
    Interval term = Interval::point(Rational(1));
    long j = 0;
    Rational tail;
    for (;;) {
        ++j;
        term = (term * ui / Rational(j)).outward_round(w);
        sum = (sum + term).outward_round(w);
        Rational tmax = term.lo().abs() > term.hi().abs() ? term.lo().abs() : term.hi().abs();
        tail = tmax * Rational(2);
        if (tail <= bound) break;
    }
    Interval e = sum + Interval(-tail, tail);
    for (long i = 0; i < s; ++i) e = (e * e).outward_round(w);
    if (e.lo().sign() <= 0) throw PrecisionError("exp: enclosure lost positivity");
    return e.outward_round(p + 32);
}

// ---------------------------------------------------------------------------
// Asymptotic digamma / polygamma / lgamma with enveloping Bernoulli tails:
// for real z > 0 the truncation error of each series is bounded in magnitude
// by the first omitted term and carries its sign.

long shift_threshold(long p, int j = 0) { return std::max<long>(12, p / 8 + 4 + j); }

struct ShiftedArg {
    Rational z;
    long m = 0;
};

ShiftedArg shift_above(const Rational& x, long threshold) {
    ShiftedArg out;
    Rational t(threshold);
    if (x >= t) { out.z = x; return out; }
    Rational gap = t - x;
    Integer mi = gap.floor() + 1;
    out.m = mi.get_si();
    out.z = x + Rational(mi);
    return out;
}

Interval digamma_raw(const Rational& x, long p) {
    for (long threshold = shift_threshold(p);; threshold *= 2) {
        ShiftedArg sh = shift_above(x, threshold);
        const Rational& z = sh.z;
        Rational z2 = z * z;
        Rational zpow = z2;
        Rational target = pow2(-(p + 6));
        Rational series(0);
        std::optional<Rational> prev_abs;
        bool converged = false;
        Rational omitted;
        for (long k = 1;; ++k) {
            Rational term = bernoulli(2 * k) / (Rational(2 * k) * zpow);
            Rational a = term.abs();
            if (a <= target) { omitted = -term; converged = true; break; }
            if (prev_abs && a >= *prev_abs) break;  // asymptotic divergence
            series -= term;
            prev_abs = a;
            zpow *= z2;
        }
        if (!converged) continue;
        Interval r = log_raw(z, p + 6) - Rational(1, 2) / z + series;
        r = r + Interval::hull_with_zero(omitted);
        Rational back(0);
        for (long i = 0; i < sh.m; ++i) back += (x + Rational(i)).reciprocal();
        return (r - back).outward_round(p + 32);
    }
}

Interval digamma_cum(const Rational& x, long p) {
    return g_fn_cache.get(kDigamma, 0, x, p, [&](long q) { return digamma_raw(x, q); });
}

Interval polygamma_raw(int j, const Rational& x, long p) {
    for (long threshold = shift_threshold(p, j);; threshold *= 2) {
        ShiftedArg sh = shift_above(x, threshold);
        const Rational& z = sh.z;
        Rational z2 = z * z;
        Rational fj1 = Rational(factorial(j - 1));
        Rational fj = fj1 * Rational(j);
        // bracket = (j-1)!/z^j + j!/(2 z^{j+1}) + sum_k B_2k (2k+j-1)!/((2k)! z^{2k+j})
        Rational zj = z.pow(j);
        Rational lead = fj1 / zj + fj / (Rational(2) * zj * z);
        Rational target = pow2(-(p + 6));
        Rational series(0);
        Rational ratio = Rational(factorial(j + 1)) / Rational(2);  // (2k+j-1)!/(2k)!, k=1
        Rational zpow = zj * z2;
        std::optional<Rational> prev_abs;
        bool converged = false;
        Rational omitted;
        for (long k = 1;; ++k) {
            Rational term = bernoulli(2 * k) * ratio / zpow;
            Rational a = term.abs();
            if (a <= target) { omitted = term; converged = true; break; }
            if (prev_abs && a >= *prev_abs) break;
            series += term;
            prev_abs = a;
            ratio *= Rational((2 * k + j) * (2 * k + j + 1), (2 * k + 1) * (2 * k + 2));
            zpow *= z2;
        }
        if (!converged) continue;
        Interval bracket = Interval::point(lead + series) + Interval::hull_with_zero(omitted);
        Interval r = (j % 2 == 1) ? bracket : -bracket;  // (-1)^{j-1} prefactor
        // psi_j(x) = psi_j(x+m) - (-1)^j j! sum_{i<m} 1/(x+i)^{j+1}
        Rational back(0);
        for (long i = 0; i < sh.m; ++i) back += (x + Rational(i)).pow(-(j + 1));
        back *= fj;
        if (j % 2 == 1) back = -back;
        return (r - back).outward_round(p + 32);
    }
}

Interval polygamma_cum(int j, const Rational& x, long p) {
    return g_fn_cache.get(kPolygamma, j, x, p,
                          [&](long q) { return polygamma_raw(j, x, q); });
}

Interval lgamma_raw(const Rational& x, long p) {
    for (long threshold = std::max<long>(12, p / 8 + 6);; threshold *= 2) {
        ShiftedArg sh = shift_above(x, threshold);
        const Rational& z = sh.z;
        Rational z2 = z * z;
        Rational zpow = z;
        Rational target = pow2(-(p + 6));
        Rational series(0);
        std::optional<Rational> prev_abs;
        bool converged = false;
        Rational omitted;
        for (long k = 1;; ++k) {
            Rational term = bernoulli(2 * k) / (Rational((2 * k) * (2 * k - 1)) * zpow);
            Rational a = term.abs();
            if (a <= target) { omitted = term; converged = true; break; }
            if (prev_abs && a >= *prev_abs) break;
            series += term;
            prev_abs = a;
            zpow *= z2;
        }
        if (!converged) continue;
        long zbits = magnitude_bits(z) + 2;
        Interval r = log_raw(z, p + 10 + zbits) * (z - Rational(1, 2));
        r = r - z + half_ln_2pi(p + 10) + series;
        r = r + Interval::hull_with_zero(omitted);
        if (sh.m > 0) {
            Rational poch(1);
            for (long i = 0; i < sh.m; ++i) poch *= x + Rational(i);
            r = r - log_raw(poch, p + 10);
        }
        return r.outward_round(p + 32);
    }
}

Interval lgamma_cum(const Rational& x, long p) {
    return g_fn_cache.get(kLgamma, 0, x, p, [&](long q) { return lgamma_raw(x, q); });
}

bool is_pole(const Rational& x) { return x.is_integer() && x.sign() <= 0; }

// ---------------------------------------------------------------------------
// Gamma-ratio binomial.

struct GammaShift {
    Rational arg;      // shifted to >= 1
    Rational factors;  // Gamma(orig) = Gamma(arg)/factors
};

GammaShift shift_gamma_arg(Rational a) {
    GammaShift g{a, Rational(1)};
    while (g.arg < Rational(1)) {
        g.factors *= g.arg;
        g.arg += Rational(1);
    }
    return g;
}

Interval binom_gamma(const Rational& r, const Rational& s, const Precision& prec) {
    GammaShift ga = shift_gamma_arg(r + Rational(1));
    GammaShift gb = shift_gamma_arg(s + Rational(1));
    GammaShift gc = shift_gamma_arg(r - s + Rational(1));
    // C = Q * Gamma(A)/(Gamma(B) Gamma(C)), Q = fb fc / fa
    Rational q = gb.factors * gc.factors / ga.factors;
    auto diff_at = [&](long bits) {
        return lgamma_cum(ga.arg, bits) - lgamma_cum(gb.arg, bits) - lgamma_cum(gc.arg, bits);
    };
    Interval rough = diff_at(kLadderStart);
    long scale = static_cast<long>(std::ceil(std::fabs(rough.mid().to_double()) * 1.4427)) +
                 magnitude_bits(q) + 4;
    return refine_to(prec, [&](long p) {
        Interval d = diff_at(p + 8 + scale);
        Interval e(exp_point(d.lo(), p + 6 + scale).lo(),
                   exp_point(d.hi(), p + 6 + scale).hi());
        return (e * q).outward_round(p + 32);
    });
}

enum class BinomRoute { Auto, GammaOnly };

Interval binom_dispatch(const Rational& r, const Rational& s, const Precision& prec,
                        BinomRoute route) {
    if (route == BinomRoute::Auto) {
        if (s.is_integer()) {
            if (s.sign() < 0) {
                if (r.is_integer()) return Interval::point(binomial_int(r.to_long(), s.to_long()));
                return Interval::point(Rational(0));  // Gamma(s+1) pole in the denominator
            }
            return Interval::point(gen_binomial_rational_lower(r, s.to_long()));
        }
        Rational comp = r - s;
        if (comp.is_integer()) {
            if (comp.sign() < 0) return Interval::point(Rational(0));
            return Interval::point(gen_binomial_rational_lower(r, comp.to_long()));
        }
    }
    if (is_pole(r + Rational(1)))
        throw PoleError("gen_binomial_enclosure: Gamma pole at r+1 = " + (r + 1).to_string());
    if (is_pole(s + Rational(1)) || is_pole(r - s + Rational(1)))
        throw PoleError("gen_binomial_enclosure: Gamma pole in denominator arguments");
    return binom_gamma(r, s, prec);
}

}  // namespace

long max_refinement_bits() {
    long v = g_max_bits.load(std::memory_order_relaxed);
    if (v == 0) {
        v = read_max_bits();
        g_max_bits.store(v, std::memory_order_relaxed);
    }
    return v;
}

void set_max_refinement_bits(long bits) {
    g_max_bits.store(bits < kLadderStart ? kLadderStart : bits, std::memory_order_relaxed);
}

Interval ln2_enclosure(const Precision& p) {
    return refine_to(p, [](long q) { return ln2_cum(q); });
}

Interval pi_enclosure(const Precision& p) {
    return refine_to(p, [](long q) { return pi_cum(q); });
}

Interval zeta2_enclosure(const Precision& p) {
    return refine_to(p, [](long q) {
        return (pi_cum(q + 6).pow_int(2) / Rational(6)).outward_round(q + 32);
    });
}

Interval log_enclosure(const Rational& x, const Precision& p) {
    if (x.sign() <= 0) throw DomainError("log_enclosure: argument must be positive");
    return refine_to(p, [&](long q) { return log_raw(x, q); });
}

Interval exp_enclosure(const Interval& v, const Precision& p) {
    // The width target governs the endpoint evaluations; a wide input keeps
    // its intrinsic width.
    long bits = kLadderStart;
    while (pow2(-bits) > p.eps && bits < max_refinement_bits()) bits *= 2;
    return Interval(exp_point(v.lo(), bits + 2).lo(), exp_point(v.hi(), bits + 2).hi());
}

Interval lgamma_enclosure(const Rational& x, const Precision& p) {
    if (x.sign() <= 0) throw DomainError("lgamma_enclosure: argument must be positive");
    return refine_to(p, [&](long q) { return lgamma_cum(x, q); });
}

Interval digamma_enclosure(const Rational& x, const Precision& p) {
    if (is_pole(x)) throw PoleError("digamma_enclosure: pole at " + x.to_string());
    return refine_to(p, [&](long q) { return digamma_cum(x, q); });
}

Interval polygamma_enclosure(int j, const Rational& x, const Precision& p) {
    if (j < 1) throw DomainError("polygamma_enclosure: order must be >= 1");
    if (is_pole(x)) throw PoleError("polygamma_enclosure: pole at " + x.to_string());
    return refine_to(p, [&](long q) { return polygamma_cum(j, x, q); });
}

Interval polygamma_diff_enclosure(int j, const Rational& a, const Rational& b,
                                  const Precision& p) {
    if (is_pole(a) || is_pole(b)) throw PoleError("polygamma_diff_enclosure: pole argument");
    return refine_to(p, [&](long q) {
        if (j == 0) return digamma_cum(a, q + 2) - digamma_cum(b, q + 2);
        return polygamma_cum(j, a, q + 2) - polygamma_cum(j, b, q + 2);
    });
}

Interval harmonic_enclosure(const Rational& x, const Precision& p) {
    Rational arg = x + Rational(1);
    if (is_pole(arg)) throw PoleError("harmonic_enclosure: pole at x = " + x.to_string());
    return refine_to(p, [&](long q) {
        return digamma_cum(arg, q + 2) - digamma_cum(Rational(1), q + 2);
    });
}

Interval harmonic2_enclosure(const Rational& x, const Precision& p) {
    Rational arg = x + Rational(1);
    if (is_pole(arg)) throw PoleError("harmonic2_enclosure: pole at x = " + x.to_string());
    return refine_to(p, [&](long q) {
        return polygamma_cum(1, Rational(1), q + 2) - polygamma_cum(1, arg, q + 2);
    });
}

Interval gen_binomial_enclosure(const Rational& r, const Rational& s, const Precision& p) {
    return binom_dispatch(r, s, p, BinomRoute::Auto);
}

Interval gen_binomial_gamma_enclosure(const Rational& r, const Rational& s,
                                      const Precision& p) {
    return binom_dispatch(r, s, p, BinomRoute::GammaOnly);
}

Interval ConstExpr::eval_interval(const Rational& eps) const {
    if (is_rational()) return Interval::point(as_rational());
    long coeff_bits = 0;
    for (const auto& [m, c] : terms_)
        coeff_bits = std::max(coeff_bits, magnitude_bits(c));
    return refine_to(Precision{eps}, [&](long p) {
        long q = p + 8 + coeff_bits;
        Interval sum = Interval::point(Rational(0));
        for (const auto& [m, c] : terms_) {
            Interval t = Interval::point(Rational(1));
            if (m.ln2_pow != 0) t = t * ln2_cum(q).pow_int(m.ln2_pow);
            if (m.pi_pow != 0) t = t * pi_cum(q).pow_int(m.pi_pow);
            sum = sum + t * c;
        }
        return sum.outward_round(p + 24);
    });
}

bool enclosure_contains(const Interval& enc, const ConstExpr& exact) {
    if (exact.is_rational()) return enc.contains(exact.as_rational());
    long cap = max_refinement_bits();
    for (long p = kLadderStart; p <= cap; p *= 2) {
        Interval e = exact.eval_interval(pow2(-p));
        if (enc.contains(e)) return true;
        if (!enc.intersects(e)) return false;
    }
    throw PrecisionError("enclosure_contains: could not separate at the refinement cap");
}

}  // namespace hf
