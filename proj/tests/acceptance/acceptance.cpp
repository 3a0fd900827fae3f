// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Criterion 10 drives the CLI binary named by HFVERIFY_BIN.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "hf/enclosures.hpp"
#include "hf/half_integer.hpp"
#include "hf/verify.hpp"

using namespace hf;
using R = Rational;

namespace {

int g_failures = 0;

struct Criterion {
    std::string label;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    double limit_secs = 0;  // 0: no stated budget

    explicit Criterion(std::string l, double limit = 0) : label(std::move(l)), limit_secs(limit) {}
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
    ~Criterion() {
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        if (limit_secs > 0 && secs > limit_secs && ok) {
            ok = false;
            detail = "runtime budget exceeded";
        }
        std::printf("[%s] %s (%.1f s)%s%s\n", ok ? "PASS" : "FAIL", label.c_str(), secs,
                    detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++g_failures;
    }
};

std::vector<R> rationals(long lo, long hi) {
    std::vector<R> v;
    for (long i = lo; i <= hi; ++i) v.push_back(R(i));
    return v;
}

long draw_in(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

void criterion1() {
    Criterion c("criterion 1: Frisch identity exact, n in [1,40], b in 1..8, c in 1..b", 60);
    GridSpec g;
    g.n_min = 1;
    g.n_max = 40;
    g.b_values = rationals(1, 8);
    g.c_values = rationals(1, 8);
    auto rep = verify_exact("Id_Frisch", g);
    c.require(rep.failed() == 0 && rep.count(Status::Inconclusive) == 0, rep.summary());
    c.require(rep.passed() == 40 * 36, "expected 1440 in-domain passes, got " +
                                           std::to_string(rep.passed()));
}

void criterion2() {
    Criterion c("criterion 2: integer-parameter catalog exact, n in [1,30], b<=6, c<=b");
    const char* ids[] = {
        "main_id1",   "main_id1b",    "main_id11",    "main_id11b",   "cor_id1",
        "cor_id1_b1", "main_id2",     "main_id22",    "main_id22_b0", "eq.auhzvb5",
        "eq.auhzvb5_bn", "cor_id2",   "eq.twi4acl",   "cor_id3",      "cor_id3_bn",
        "binomial_frac_id", "remark_split_b", "remark_split_k", "eq.hzbwh6o",
        "eq.ufus43q", "Bai_id",       "eq.soe68bj",   "eq.lht3ics",   "eq.qr5oi89",
        "eq.iauweap", "id_Hk_squared", "id_HkHkn",    "eq.vsafq0i",   "boyadzhiev_k2",
        "peterson_product", "peterson_squared"};
    GridSpec g;
    g.n_min = 1;
    g.n_max = 30;
    g.b_values = rationals(1, 6);
    g.c_values = rationals(1, 6);
    g.m_values = {1, 2, 3};
    long total_pass = 0;
    for (const char* id : ids) {
        auto rep = verify_exact(id, g);
        c.require(rep.failed() == 0 && rep.count(Status::Inconclusive) == 0 &&
                      rep.count(Status::Unsupported) == 0,
                  rep.summary());
        c.require(rep.passed() > 0, std::string(id) + ": nothing verified");
        total_pass += rep.passed();
    }
    // 3 (b,c)-identities x 30 x 21 + 19 b-identities x 30 x 6 + 9 bare x 30
    c.require(total_pass == 5580, "expected 5580 in-domain passes, got " +
                                      std::to_string(total_pass));
}

void criterion3() {
    Criterion c("criterion 3: half-integer catalog exact in the constant ring, n in [0,40]", 120);
    const char* ids[] = {
        "eq.h9wjxs0a", "eq.h9wjxs0b", "half_H_closed_form", "eq.plh634k",
        "half_H_diff_half", "eq.ivi1ex5", "half_H_plus_diff_half", "half_H_step",
        "eq.pobmr6h", "half_H_plus_diff_m3half", "eq.cwrdtmu",
        "eq.s0t6h30",  "eq.dtwjzd8",  "eq.q3uie78", "eq.cm3vohl", "eq.main_odd1_1",
        "eq.main_odd1_1_inv", "eq.cqklzqh", "eq.fhj2wwz", "eq.xyz1", "eq.nh1vubi",
        "eq.nzxpc5c",  "eq.pj6av0a",  "eq.zxdl17v", "eq.jm6rck7", "eq.u1t9s6r",
        "eq.fqnumdk",  "eq.b357dyz",  "main_odd4_1", "eq.main_odd4_2", "main_odd4_3",
        "eq.hc2fi1o",  "eq.zmrbc4e",  "eq.mtof7yp", "eq.xxyyzz1", "eq.xxyyzz2",
        "eq.yq8ibvs",  "odd_cube",    "eq.cqhkqwq", "eq.awov07j", "eq.y491lmb",
        "odd_HkOk",    "eq.wsi7oju"};
    GridSpec g;
    g.n_min = 0;
    g.n_max = 40;
    g.b_values = rationals(0, 40);  // doubles as the s-slot for the Gould forms
    for (const char* id : ids) {
        auto rep = verify_exact(id, g, ExactMode::ForceRing);
        c.require(rep.failed() == 0 && rep.count(Status::Inconclusive) == 0 &&
                      rep.count(Status::Unsupported) == 0,
                  rep.summary());
        c.require(rep.passed() > 0, std::string(id) + ": nothing verified");
    }
}

void criterion4() {
    Criterion c("criterion 4: spot values 25/48, 7/8, -1/3 reproduced exactly");
    // direct-summation oracles
    R s1(0);
    for (long k = 0; k <= 3; ++k) s1 += neg1pow(k) * binomial_int(3, k) / R((k + 1) * (k + 1));
    c.require(s1 == R(25, 48) && s1 == harmonic(4) / R(4), "oracle for 25/48");
    R s2(0);
    for (long k = 0; k <= 1; ++k)
        s2 += neg1pow(k) * binomial_int(1, k) / R((k + 1) * (k + 1) * (k + 1));
    c.require(s2 == R(7, 8), "oracle for 7/8");
    R s3(0);
    for (long k = 0; k <= 3; ++k) s3 += neg1pow(k) * binomial_int(3, k) * harmonic(k);
    c.require(s3 == R(-1, 3), "oracle for -1/3");

    GridSpec g3;
    g3.n_min = g3.n_max = 3;
    auto r1 = verify_exact("cor_id1_b1", g3);
    c.require(r1.ok() && r1.instances.front().lhs_text == "25/48", "cor_id1_b1 at n=3");
    GridSpec g1;
    g1.n_min = g1.n_max = 1;
    auto r2 = verify_exact("Bai_id", g1);
    c.require(r2.ok() && r2.instances.front().lhs_text == "7/8", "Bai_id at n=1");
    auto r3 = verify_exact("main_id22_b0", g3);
    c.require(r3.ok() && r3.instances.front().lhs_text == "-1/3", "main_id22_b0 at n=3");
}

void criterion5() {
    Criterion c("criterion 5: m-derivative family equals the alternating sum, 450 instances", 30);
    long checked = 0;
    for (long n = 1; n <= 15; ++n) {
        for (long b = 1; b <= 5; ++b) {
            for (long m = 1; m <= 6; ++m) {
                R direct(0);
                for (long k = 0; k <= n; ++k)
                    direct += neg1pow(k) * binomial_int(n, k) / R(b + k).pow(m);
                if (mth_power_sum_closed_form(n, b, m) != direct) {
                    c.require(false, "mismatch at n=" + std::to_string(n) +
                                         " b=" + std::to_string(b) +
                                         " m=" + std::to_string(m));
                    return;
                }
                ++checked;
            }
        }
    }
    c.require(checked == 450, "expected 450 instances");
}

void criterion6() {
    Criterion c("criterion 6: interval engine, 200 seeded rational bindings per identity");
    const char* ids[] = {"Id_Frisch", "main_id1", "main_id2", "eq.ufus43q"};
    std::mt19937_64 rng(20250809);
    for (const char* id : ids) {
        const auto& d = get_identity(id);
        std::vector<Binding> bindings;
        while (bindings.size() < 200) {
            Binding t;
            t.n = draw_in(rng, 1, 6);
            if (d.params.uses_b) t.b = R(draw_in(rng, -40, 40), draw_in(rng, 1, 9));
            if (d.params.uses_c) t.c = R(draw_in(rng, -40, 40), draw_in(rng, 1, 9));
            if (d.domain(t)) bindings.push_back(t);
        }
        auto rep = verify_interval(id, bindings, Precision::bits(64));
        c.require(rep.passed() == 200 && rep.failed() == 0 &&
                      rep.count(Status::Inconclusive) == 0,
                  rep.summary());
        for (const auto& ins : rep.instances) {
            c.require(ins.lhs_width && *ins.lhs_width <= pow2(-64), "lhs width target");
            c.require(ins.rhs_width && *ins.rhs_width <= pow2(-64), "rhs width target");
        }
    }
}

void criterion7() {
    Criterion c("criterion 7: enclosures at 2^-80 contain every exact ring value");
    Precision p = Precision::bits(80);
    for (long n = 0; n <= 30; ++n) {
        c.require(enclosure_contains(harmonic_enclosure(R(n) - R(1, 2), p),
                                     harmonic_half({n, HalfArg::MinusHalf})),
                  "H_{n-1/2} containment at n=" + std::to_string(n));
        c.require(enclosure_contains(harmonic_enclosure(R(n) + R(1, 2), p),
                                     harmonic_half({n, HalfArg::PlusHalf})),
                  "H_{n+1/2} containment at n=" + std::to_string(n));
        c.require(enclosure_contains(harmonic2_enclosure(R(n) - R(1, 2), p),
                                     harmonic2_half(n)),
                  "H2_{n-1/2} containment at n=" + std::to_string(n));
    }
    for (long r = 0; r <= 20; ++r) {
        for (long s = 0; s <= r; ++s) {
            c.require(
                enclosure_contains(
                    gen_binomial_gamma_enclosure(R(2 * r + 1, 2), R(s), p),
                    binomial_half(BinomialHalfShape::UpperPlusHalf, r, s)),
                "C(r+1/2,s) containment");
            c.require(
                enclosure_contains(
                    gen_binomial_gamma_enclosure(R(2 * r - 1, 2), R(s), p),
                    binomial_half(BinomialHalfShape::UpperMinusHalf, r, s)),
                "C(r-1/2,s) containment");
        }
        c.require(enclosure_contains(gen_binomial_gamma_enclosure(R(r), R(1, 2), p),
                                     binomial_half(BinomialHalfShape::LowerHalf, r, 0)),
                  "C(r,1/2) containment");
        c.require(enclosure_contains(gen_binomial_gamma_enclosure(R(r), R(-1, 2), p),
                                     binomial_half(BinomialHalfShape::LowerMinusHalf, r, 0)),
                  "C(r,-1/2) containment");
        c.require(
            enclosure_contains(gen_binomial_gamma_enclosure(R(2 * r - 1, 2), R(r + 1), p),
                               binomial_half(BinomialHalfShape::TopShifted, r, 0)),
            "C(r-1/2,r+1) containment");
    }
}

void criterion8() {
    Criterion c("criterion 8: derivative relations pass the finite-difference order check");
    std::vector<R> hs{R(1, 8), R(1, 16), R(1, 32), R(1, 64)};
    struct Case {
        const char* derived;
        const char* base;
        Binding at;
    };
    Case cases[] = {
        {"main_id1", "Id_Frisch", Binding{3, R(2), R(1), {}}},
        {"main_id2", "Id_Frisch", Binding{3, R(3), R(1), {}}},
        {"eq.soe68bj", "main_id22", Binding{2, R(3, 2), {}, {}}},
        {"eq.ufus43q", "cor_id1", Binding{1, R(2), {}, {}}},
        {"eq.iauweap", "eq.hzbwh6o", Binding{2, R(2), {}, {}}},
    };
    long declared = 0;
    for (const auto& d : list_identities())
        for (const auto& rel : d.relations)
            if (rel.deriv) ++declared;
    c.require(declared == 5, "expected 5 declared derivative relations, found " +
                                 std::to_string(declared));
    for (const auto& k : cases) {
        auto rep = derivative_consistency(k.base, k.derived, k.at, hs, Precision::bits(96));
        c.require(rep.ok(), std::string(k.derived) + ": " + rep.instances.front().note);
    }
}

void criterion9() {
    Criterion c("criterion 9: transform pairs exact for n <= 20, involution on random sequences");
    GridSpec g;
    g.n_min = 1;
    g.n_max = 20;
    g.b_values = rationals(1, 3);
    g.c_values = rationals(1, 2);
    long pairs = 0;
    for (const auto& d : list_identities()) {
        for (const auto& rel : d.relations) {
            if (!rel.transform) continue;
            auto rep = transform_crosscheck(rel.target, d.id, g);
            c.require(rep.ok() && rep.passed() > 0,
                      d.id + " transform of " + rel.target + ": " + rep.summary());
            ++pairs;
        }
    }
    c.require(pairs >= 12, "expected at least 12 transform pairs");

    std::mt19937_64 rng(1);
    for (int rep = 0; rep < 30; ++rep) {
        long len = 1 + draw_in(rng, 0, 24);
        std::vector<R> a;
        for (long i = 0; i < len; ++i) a.push_back(R(draw_in(rng, -99, 99), draw_in(rng, 1, 30)));
        std::vector<R> once;
        for (long n = 0; n < len; ++n) once.push_back(binomial_transform(a, n));
        for (long n = 0; n < len; ++n)
            c.require(binomial_transform(once, n) == a[static_cast<size_t>(n)],
                      "involution failed");
    }
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void criterion10() {
    Criterion c("criterion 10: CLI determinism and exit codes 0/1/2");
    const char* bin = std::getenv("HFVERIFY_BIN");
    if (!bin) {
        c.require(false, "HFVERIFY_BIN not set");
        return;
    }
    std::string b(bin);
    auto run = [&](const std::string& cmd) { return std::system(cmd.c_str()) / 256; };

    int rc1 = run(b + " fuzz --id Id_Frisch --seed 7 --count 100 --prec 64 --format csv"
                      " --out /tmp/hf_fuzz_a.csv 2>/dev/null");
    int rc2 = run(b + " fuzz --id Id_Frisch --seed 7 --count 100 --prec 64 --format csv"
                      " --out /tmp/hf_fuzz_b.csv 2>/dev/null");
    c.require(rc1 == 0 && rc2 == 0, "fuzz exit codes");
    c.require(slurp("/tmp/hf_fuzz_a.csv") == slurp("/tmp/hf_fuzz_b.csv"),
              "fuzz output not byte-identical across runs");
    int rc3 = run("HF_WORKERS=4 " + b +
                  " fuzz --id Id_Frisch --seed 7 --count 100 --prec 64 --format csv"
                  " --out /tmp/hf_fuzz_c.csv 2>/dev/null");
    c.require(rc3 == 0 && slurp("/tmp/hf_fuzz_a.csv") == slurp("/tmp/hf_fuzz_c.csv"),
              "fuzz output differs across worker counts");

    c.require(run(b + " verify --id Id_Frisch --n-max 10 --backend exact >/dev/null"
                      " 2>/dev/null") == 0,
              "expected exit 0");
    c.require(run("HF_MAX_BITS=24 " + b +
                  " verify --id main_id1 --n-max 3 --b 7/3 --c 3/4 --backend interval"
                  " --prec 64 >/dev/null 2>/dev/null") == 1,
              "expected exit 1 (inconclusive under HF_MAX_BITS cap)");
    c.require(run(b + " verify --id no_such_id >/dev/null 2>/dev/null") == 2,
              "expected exit 2 for unknown id");
    c.require(run(b + " verify --format nope --id Id_Frisch >/dev/null 2>/dev/null") == 2,
              "expected exit 2 for bad flag value");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (g_failures == 0) std::printf("acceptance: all criteria passed\n");
    else std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return g_failures;
}
