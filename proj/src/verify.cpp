#include "hf/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

namespace hf {

namespace {

using R = Rational;

template <class Fn>
void parallel_for(size_t count, Fn fn) {
    unsigned workers = std::min<size_t>(worker_count(), count);
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start)
            .count();
    }
};

// 30-digit decimal approximations of both witnesses, for failure triage.
std::string failure_decimals(const Rational& lhs, const Rational& rhs) {
    return " lhs~" + lhs.to_decimal(30) + " rhs~" + rhs.to_decimal(30);
}

std::string failure_decimals(const ConstExpr& lhs, const ConstExpr& rhs) {
    Rational eps = pow2(-110);
    return " lhs~" + lhs.eval_interval(eps).mid().to_decimal(30) + " rhs~" +
           rhs.eval_interval(eps).mid().to_decimal(30);
}

long precision_bits(const Precision& prec) {
    // smallest p with 2^-p <= eps
    long p = 1;
    while (pow2(-p) > prec.eps && p < (1L << 24)) ++p;
    return p;
}

// Evaluates one exact instance in the rational backend, falling back to the
// ring backend on unsupported argument shapes.
InstanceResult exact_instance(const IdentityDescriptor& d, const Binding& t, ExactMode mode) {
    InstanceResult res;
    res.binding = t;
    if (!d.domain(t)) {
        res.status = Status::SkippedPole;
        res.note = "outside domain";
        return res;
    }
    bool try_rat = has_backend(d.backends, Backend::ExactRational) &&
                   mode != ExactMode::ForceRing;
    bool try_ring = has_backend(d.backends, Backend::ExactRing) &&
                    mode != ExactMode::ForceRational;
    if (try_rat) {
        try {
            RatCtx cx;
            R lhs = evaluate_lhs(d, cx, t);
            R rhs = evaluate_rhs(d, cx, t);
            res.status = lhs == rhs ? Status::Pass : Status::Fail;
            res.lhs_text = lhs.to_string();
            res.rhs_text = rhs.to_string();
            res.note = "rational";
            if (res.status == Status::Fail) res.note += failure_decimals(lhs, rhs);
            return res;
        } catch (const UnsupportedError&) {
            // fall through to the ring backend
        } catch (const PoleError& e) {
            res.status = Status::SkippedPole;
            res.note = e.what();
            return res;
        } catch (const DomainError& e) {
            res.status = Status::Fail;
            res.note = std::string("evaluation error: ") + e.what();
            return res;
        }
    }
    if (try_ring) {
        try {
            RingCtx cx;
            ConstExpr lhs = evaluate_lhs(d, cx, t);
            ConstExpr rhs = evaluate_rhs(d, cx, t);
            res.status = lhs == rhs ? Status::Pass : Status::Fail;
            res.lhs_text = lhs.to_string();
            res.rhs_text = rhs.to_string();
            res.note = "constring";
            if (res.status == Status::Fail) res.note += failure_decimals(lhs, rhs);
            return res;
        } catch (const RingOverflowError& e) {
            res.status = Status::Fail;
            res.note = std::string("ring overflow: ") + e.what();
            return res;
        } catch (const UnsupportedError& e) {
            res.status = Status::Unsupported;
            res.note = e.what();
            return res;
        } catch (const PoleError& e) {
            res.status = Status::SkippedPole;
            res.note = e.what();
            return res;
        } catch (const DomainError& e) {
            res.status = Status::Fail;
            res.note = std::string("evaluation error: ") + e.what();
            return res;
        }
    }
    res.status = Status::Unsupported;
    res.note = "no exact backend for this binding";
    return res;
}

InstanceResult interval_instance(const IdentityDescriptor& d, const Binding& t,
                                 const Precision& prec) {
    InstanceResult res;
    res.binding = t;
    if (!d.domain(t)) {
        res.status = Status::SkippedPole;
        res.note = "outside domain";
        return res;
    }
    if (!has_backend(d.backends, Backend::Interval)) {
        res.status = Status::Unsupported;
        res.note = "no interval backend";
        return res;
    }
    long bits = precision_bits(prec);
    long extra = 8;
    for (long g = t.n + 2; g > 1; g /= 2) ++extra;
    long cap = max_refinement_bits();
    for (long work = bits + extra; work <= cap; work *= 2) {
        IvalCtx cx{work};
        try {
            Interval lhs = evaluate_lhs(d, cx, t).outward_round(bits + 40);
            Interval rhs = evaluate_rhs(d, cx, t).outward_round(bits + 40);
            res.lhs_width = lhs.width();
            res.rhs_width = rhs.width();
            res.lhs_text = lhs.mid().to_string();
            res.rhs_text = rhs.mid().to_string();
            if (lhs.width() <= prec.eps && rhs.width() <= prec.eps) {
                res.status = lhs.intersects(rhs) ? Status::Pass : Status::Fail;
                if (res.status == Status::Fail)
                    res.note = "disjoint enclosures: certified counterexample" +
                               failure_decimals(lhs.mid(), rhs.mid());
                return res;
            }
        } catch (const PoleError& e) {
            res.status = Status::SkippedPole;
            res.note = e.what();
            return res;
        } catch (const PrecisionError&) {
            break;
        } catch (const DomainError&) {
            // division through a zero-straddling enclosure: refine further
        }
    }
    res.status = Status::Inconclusive;
    res.note = "enclosure width target not reached (cap " + std::to_string(cap) + " bits)";
    return res;
}

}  // namespace

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::SkippedPole: return "skipped-pole";
        case Status::Unsupported: return "unsupported";
        case Status::Inconclusive: return "inconclusive-precision";
    }
    return "?";
}

long VerificationReport::count(Status s) const {
    long n = 0;
    for (const auto& i : instances)
        if (i.status == s) ++n;
    return n;
}

std::string VerificationReport::summary() const {
    return id + " [" + backend + "]: " + std::to_string(passed()) + " pass, " +
           std::to_string(failed()) + " fail, " + std::to_string(count(Status::SkippedPole)) +
           " skipped, " + std::to_string(count(Status::Unsupported)) + " unsupported, " +
           std::to_string(count(Status::Inconclusive)) + " inconclusive";
}

unsigned worker_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("HF_WORKERS")) {
        long v = std::atol(env);
        if (v >= 1) return std::min<unsigned>(hw, static_cast<unsigned>(v));
    }
    return std::min(hw, 8u);
}

std::vector<Binding> enumerate_bindings(const IdentityDescriptor& d, const GridSpec& grid) {
    std::vector<R> bs = d.params.uses_b ? grid.b_values : std::vector<R>{};
    std::vector<R> cs = d.params.uses_c ? grid.c_values : std::vector<R>{};
    std::vector<long> ms = d.params.uses_m ? grid.m_values : std::vector<long>{};
    std::sort(bs.begin(), bs.end());
    bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());

    std::vector<Binding> out;
    for (long n = grid.n_min; n <= grid.n_max; ++n) {
        auto with_m = [&](Binding t) {
            if (d.params.uses_m) {
                for (long m : ms) {
                    t.m = m;
                    out.push_back(t);
                }
            } else {
                out.push_back(t);
            }
        };
        auto with_c = [&](Binding t) {
            if (d.params.uses_c) {
                for (const R& c : cs) {
                    t.c = c;
                    with_m(t);
                }
            } else {
                with_m(t);
            }
        };
        Binding t;
        t.n = n;
        if (d.params.uses_b) {
            for (const R& b : bs) {
                t.b = b;
                with_c(t);
            }
        } else {
            with_c(t);
        }
    }
    return out;
}

VerificationReport verify_exact(const std::string& id, const GridSpec& grid, ExactMode mode) {
    Timer timer;
    const auto& d = get_identity(id);
    VerificationReport rep;
    rep.id = id;
    rep.backend = mode == ExactMode::ForceRing ? "exact-constring" : "exact";
    auto bindings = enumerate_bindings(d, grid);
    rep.instances.resize(bindings.size());
    parallel_for(bindings.size(),
                 [&](size_t i) { rep.instances[i] = exact_instance(d, bindings[i], mode); });
    rep.wall_ms = timer.ms();
    return rep;
}

VerificationReport verify_interval(const std::string& id, std::span<const Binding> bindings,
                                   const Precision& prec) {
    Timer timer;
    const auto& d = get_identity(id);
    VerificationReport rep;
    rep.id = id;
    rep.backend = "interval";
    rep.instances.resize(bindings.size());
    parallel_for(bindings.size(),
                 [&](size_t i) { rep.instances[i] = interval_instance(d, bindings[i], prec); });
    rep.wall_ms = timer.ms();
    return rep;
}

VerificationReport verify_interval(const std::string& id, const Binding& binding,
                                   const Precision& prec) {
    return verify_interval(id, std::span<const Binding>(&binding, 1), prec);
}

Rational binomial_transform(const std::vector<Rational>& a, long n) {
    return binomial_transform(std::span<const Rational>(a.data(), a.size()), n);
}

VerificationReport transform_crosscheck(const std::string& id_a, const std::string& id_b,
                                        const GridSpec& grid) {
    Timer timer;
    // The check payload lives on the derived identity; accept either argument
    // order.
    const IdentityDescriptor* self = nullptr;
    const IdentityDescriptor* target = nullptr;
    const TransformCheck* check = nullptr;
    for (auto [s, t] : {std::pair{&id_b, &id_a}, std::pair{&id_a, &id_b}}) {
        const auto& ds = get_identity(*s);
        for (const auto& rel : ds.relations) {
            if (rel.transform && rel.target == *t) {
                self = &ds;
                target = &get_identity(*t);
                check = &*rel.transform;
                break;
            }
        }
        if (check) break;
    }
    if (!check)
        throw UnknownIdentityError("no transform relation declared between '" + id_a +
                                   "' and '" + id_b + "'");

    VerificationReport rep;
    rep.id = self->id;
    rep.backend = "transform(" + target->id + ")";

    std::vector<R> bs = self->params.uses_b ? grid.b_values : std::vector<R>{R(0)};
    std::vector<R> cs = self->params.uses_c ? grid.c_values : std::vector<R>{R(0)};
    std::sort(bs.begin(), bs.end());
    std::sort(cs.begin(), cs.end());

    RatCtx cx;
    for (const R& b : bs) {
        for (const R& c : cs) {
            // sequence of the target identity's values at k = 0..n_max,
            // patched by brute-force summation where its rhs is undefined
            std::vector<R> seq;
            bool supported = true;
            long top = grid.n_max;
            for (long k = 0; k <= top && supported; ++k) {
                Binding tk;
                tk.n = k;
                if (target->params.uses_b) tk.b = b;
                if (target->params.uses_c) tk.c = c;
                try {
                    seq.push_back(target->domain(tk) ? evaluate_rhs(*target, cx, tk)
                                                     : evaluate_lhs(*target, cx, tk));
                } catch (const UnsupportedError&) {
                    supported = false;
                } catch (const PoleError&) {
                    supported = false;
                }
            }
            for (long n = std::max<long>(1, grid.n_min); n <= top; ++n) {
                Binding t;
                t.n = n;
                if (self->params.uses_b) t.b = b;
                if (self->params.uses_c) t.c = c;
                InstanceResult res;
                res.binding = t;
                if (!supported || !self->domain(t) || !target->domain(t)) {
                    res.status = Status::SkippedPole;
                    res.note = supported ? "outside domain" : "sequence not rational-evaluable";
                    rep.instances.push_back(res);
                    continue;
                }
                R lhs = binomial_transform(std::span<const R>(seq.data(), seq.size()), n);
                R expected = call_value(check->phi, cx, t) * evaluate_rhs(*self, cx, t);
                if (check->rho) expected += call_value(*check->rho, cx, t);
                res.status = (lhs == expected) ? Status::Pass : Status::Fail;
                res.lhs_text = lhs.to_string();
                res.rhs_text = expected.to_string();
                res.note = "transform of " + target->id;

                // involution: transforming the transform returns the sequence
                if (res.status == Status::Pass) {
                    std::vector<R> once;
                    for (long j = 0; j <= n; ++j)
                        once.push_back(binomial_transform(
                            std::span<const R>(seq.data(), seq.size()), j));
                    for (long j = 0; j <= n; ++j) {
                        if (binomial_transform(std::span<const R>(once.data(), once.size()),
                                               j) != seq[static_cast<size_t>(j)]) {
                            res.status = Status::Fail;
                            res.note = "involution failed at j=" + std::to_string(j);
                            break;
                        }
                    }
                }
                rep.instances.push_back(res);
            }
        }
    }
    rep.wall_ms = timer.ms();
    return rep;
}

VerificationReport derivative_consistency(const std::string& base_id,
                                          const std::string& derived_id, const Binding& at,
                                          const std::vector<Rational>& h_values,
                                          const Precision& prec) {
    Timer timer;
    const auto& base = get_identity(base_id);
    const auto& derived = get_identity(derived_id);
    const DerivCheck* check = nullptr;
    bool in_b = true;
    for (const auto& rel : derived.relations) {
        if (rel.deriv && rel.target == base_id) {
            check = &*rel.deriv;
            in_b = rel.kind == RelationKind::DerivativeInBOf;
            break;
        }
    }
    if (!check)
        throw UnknownIdentityError("no derivative relation declared from '" + derived_id +
                                   "' to '" + base_id + "'");
    if (!derived.domain(at) || !base.domain(at))
        throw DomainError("derivative_consistency: binding outside domain");

    std::vector<R> hs = h_values;
    std::sort(hs.begin(), hs.end());
    std::reverse(hs.begin(), hs.end());  // largest first
    if (hs.size() < 2) throw DomainError("derivative_consistency: need at least two h values");

    long bits = precision_bits(prec);
    IvalCtx cx{bits};
    VerificationReport rep;
    rep.id = derived_id;
    rep.backend = "derivative(" + base_id + (in_b ? ",b)" : ",c)");

    auto shifted = [&](const R& h) {
        Binding t = at;
        if (in_b) t.b = at.b_val() + h;
        else t.c = at.c_val() + h;
        if (!base.domain(t)) throw DomainError("derivative_consistency: h leaves the domain");
        return t;
    };

    for (int side = 0; side < 2; ++side) {
        auto eval_side = [&](const IdentityDescriptor& d, const Binding& t) {
            return side == 0 ? evaluate_lhs(d, cx, t) : evaluate_rhs(d, cx, t);
        };
        Interval target = eval_side(derived, at) * check->lambda_factor;
        if (check->mu)
            target = target + call_value(*check->mu, cx, at) * eval_side(base, at);
        R target_mid = target.mid();

        std::vector<R> errs;
        for (const R& h : hs) {
            Interval fd =
                (eval_side(base, shifted(h)) - eval_side(base, shifted(-h))) / (R(2) * h);
            errs.push_back((fd.mid() - target_mid).abs());
        }

        InstanceResult res;
        res.binding = at;
        res.note = side == 0 ? "lhs" : "rhs";
        res.status = Status::Pass;
        std::string detail;
        for (size_t i = 0; i + 1 < errs.size(); ++i) {
            if (errs[i + 1].is_zero()) continue;
            R ratio = errs[i] / errs[i + 1];
            detail += (detail.empty() ? "ratios " : " ") + ratio.to_decimal(3);
            if (ratio < R(7, 2) || ratio > R(9, 2)) res.status = Status::Fail;
        }
        // final error must be at the h^2 scale; tolerance 32 h_min^2
        R tol = hs.back() * hs.back() * R(32);
        if (errs.back() > tol) res.status = Status::Fail;
        res.lhs_text = errs.front().to_decimal(12);
        res.rhs_text = errs.back().to_decimal(12);
        res.note += " " + detail;
        rep.instances.push_back(res);
    }
    rep.wall_ms = timer.ms();
    return rep;
}

Rational mth_power_sum_closed_form(long n, long b, long m) {
    if (n < 0 || b < 1 || m < 1)
        throw DomainError("mth_power_sum_closed_form: need n >= 0, b >= 1, m >= 1");
    // u^(i)(b) = (-1)^{i-1} i! (H^(i+1)_{n+b} - H^(i+1)_{b-1})
    auto u = [&](long i) {
        R diff = gen_harmonic(n + b, static_cast<int>(i + 1)) -
                 gen_harmonic(b - 1, static_cast<int>(i + 1));
        R v = R(factorial(i)) * diff;
        return (i % 2 == 0) ? -v : v;
    };
    std::vector<R> f{R(1, b) / binomial_int(n + b, b)};
    for (long j = 0; j + 1 < m; ++j) {
        R s(0);
        for (long i = 0; i <= j; ++i) s += binomial_int(j, i) * f[static_cast<size_t>(i)] * u(j - i);
        f.push_back(s);
    }
    return neg1pow(m - 1) / R(factorial(m - 1)) * f[static_cast<size_t>(m - 1)];
}

Interval mth_power_sum_enclosure(long n, const Rational& b, long m, const Precision& prec) {
    if (n < 0 || m < 1 || b.is_zero() || (b.is_integer() && b.sign() < 0))
        throw DomainError("mth_power_sum_enclosure: bad arguments");
    long bits = precision_bits(prec);
    long cap = max_refinement_bits();
    std::optional<Interval> acc;
    for (long work = bits + 8; work <= cap; work *= 2) {
        Precision sub = Precision::bits(work);
        Interval f0 = Interval::point(b.reciprocal() * gen_binomial_rational_lower(
                                                           R(n) + b, n).reciprocal());
        std::vector<Interval> f{f0};
        auto u = [&](long i) {
            return polygamma_diff_enclosure(static_cast<int>(i), b, R(n) + b + R(1), sub);
        };
        for (long j = 0; j + 1 < m; ++j) {
            Interval s = Interval::point(R(0));
            for (long i = 0; i <= j; ++i)
                s = s + f[static_cast<size_t>(i)] * u(j - i) * binomial_int(j, i);
            f.push_back(s);
        }
        Interval out = f[static_cast<size_t>(m - 1)] *
                       (neg1pow(m - 1) / R(factorial(m - 1)));
        acc = acc ? acc->intersect(out) : out;
        if (acc->width() <= prec.eps) return *acc;
    }
    throw PrecisionError("mth_power_sum_enclosure: width target not reached");
}

}  // namespace hf
