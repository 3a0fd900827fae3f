#include <doctest.h>

#include <random>

#include "hf/verify.hpp"

using hf::Binding;
using hf::GridSpec;
using hf::Rational;
using hf::Status;
using namespace hf;

namespace {

GridSpec point_grid(long n, std::vector<Rational> b = {}, std::vector<Rational> c = {}) {
    GridSpec g;
    g.n_min = g.n_max = n;
    g.b_values = std::move(b);
    g.c_values = std::move(c);
    g.m_values = {1, 2, 3};
    return g;
}

const InstanceResult& single(const VerificationReport& rep) {
    REQUIRE(rep.instances.size() == 1);
    return rep.instances.front();
}

}  // namespace

TEST_CASE("verify_exact spot instances") {
    {
        auto rep = verify_exact("cor_id1", point_grid(1, {Rational(2)}));
        CHECK(single(rep).status == Status::Pass);
        CHECK(single(rep).lhs_text == "5/36");
        CHECK(single(rep).rhs_text == "5/36");
    }
    {
        auto rep = verify_exact("id_Hk_squared", point_grid(2));
        CHECK(single(rep).status == Status::Pass);
        CHECK(single(rep).lhs_text == "1/4");
    }
    {
        auto rep = verify_exact("eq.main_odd1_1", point_grid(1));
        CHECK(single(rep).status == Status::Pass);
        CHECK(single(rep).lhs_text == "8/9");
    }
    {
        auto rep = verify_exact("main_id11", point_grid(1, {Rational(1)}));
        CHECK(single(rep).status == Status::Pass);
        CHECK(single(rep).lhs_text == "3/4");
    }
}

TEST_CASE("verify_exact covers the whole catalog on a small grid") {
    GridSpec g;
    g.n_min = 0;
    g.n_max = 6;
    g.b_values = {Rational(1), Rational(2), Rational(3)};
    g.c_values = {Rational(1), Rational(2)};
    g.m_values = {1, 2, 3, 4};
    for (const auto& d : list_identities()) {
        auto rep = verify_exact(d.id, g);
        INFO(rep.summary());
        CHECK(rep.ok());
        CHECK(rep.failed() == 0);
        CHECK(rep.passed() > 0);
        // summary counts match the instance tally
        long total = 0;
        for (Status s : {Status::Pass, Status::Fail, Status::SkippedPole, Status::Unsupported,
                         Status::Inconclusive})
            total += rep.count(s);
        CHECK(total == static_cast<long>(rep.instances.size()));
    }
}

TEST_CASE("forced ring backend verifies the odd-harmonic catalog") {
    GridSpec g;
    g.n_min = 0;
    g.n_max = 8;
    g.b_values = {Rational(0), Rational(1), Rational(2)};
    for (const char* id : {"eq.jm6rck7", "eq.cqklzqh", "half_H_closed_form", "eq.cqhkqwq",
                           "eq.cwrdtmu", "eq.dtwjzd8"}) {
        auto rep = verify_exact(id, g, ExactMode::ForceRing);
        INFO(rep.summary());
        CHECK(rep.ok());
        CHECK(rep.passed() > 0);
        for (const auto& ins : rep.instances)
            if (ins.status == Status::Pass) CHECK(ins.note == "constring");
    }
}

TEST_CASE("parametric identities verify in the ring at half-integer parameters") {
    GridSpec g;
    g.n_min = 1;
    g.n_max = 8;
    g.b_values = {Rational(-1, 2), Rational(1, 2), Rational(3, 2)};
    g.c_values = {Rational(1, 2), Rational(1)};
    for (const char* id : {"Id_Frisch", "main_id1", "main_id2", "main_id22", "cor_id1",
                           "eq.soe68bj", "eq.ufus43q", "eq.hzbwh6o", "eq.iauweap",
                           "eq.auhzvb5", "binomial_frac_id"}) {
        auto rep = verify_exact(id, g, ExactMode::ForceRing);
        INFO(rep.summary());
        CHECK(rep.failed() == 0);
        CHECK(rep.passed() > 0);
    }
}

TEST_CASE("verify_interval examples") {
    Binding t{5, Rational(7, 3), Rational(3, 4), {}};
    auto rep = verify_interval("Id_Frisch", t, Precision::bits(64));
    CHECK(single(rep).status == Status::Pass);
    CHECK(*single(rep).lhs_width <= pow2(-64));

    // half-integer binding: interval pass, cross-checked exactly by the ring
    Binding th{3, Rational(1, 2), Rational(1, 2), {}};
    CHECK(single(verify_interval("Id_Frisch", th, Precision::bits(64))).status ==
          Status::Pass);
    auto ring = verify_exact("Id_Frisch", point_grid(3, {Rational(1, 2)}, {Rational(1, 2)}),
                             ExactMode::ForceRing);
    CHECK(single(ring).status == Status::Pass);

    // b - c a negative integer is filtered as a pole
    Binding pole{2, Rational(-1), Rational(1), {}};
    CHECK(single(verify_interval("main_id1", pole, Precision::bits(32))).status ==
          Status::SkippedPole);
}

TEST_CASE("binomial transform works over every backend value type") {
    // Rational
    std::vector<Rational> a{Rational(1), Rational(1), Rational(1), Rational(1)};
    CHECK(binomial_transform(std::span<const Rational>(a.data(), a.size()), 3) ==
          Rational(0));
    // ConstExpr: T(ln2, ln2+1, ln2+2)(2) = ln2 - 2(ln2+1) + (ln2+2) = 0
    std::vector<hf::ConstExpr> ce;
    for (long k = 0; k <= 2; ++k)
        ce.push_back(hf::ConstExpr::ln2_sym() + hf::ConstExpr(Rational(k)));
    CHECK(binomial_transform(std::span<const hf::ConstExpr>(ce.data(), ce.size()), 2)
              .is_zero());
    // Interval: enclosures add up soundly
    std::vector<hf::Interval> iv;
    for (long k = 0; k <= 2; ++k)
        iv.push_back(hf::Interval(Rational(k), Rational(k) + pow2(-20)));
    hf::Interval ti = binomial_transform(std::span<const hf::Interval>(iv.data(), iv.size()), 2);
    CHECK(ti.contains(Rational(0)));
    CHECK(ti.width() <= pow2(-18));
}

TEST_CASE("binomial transform values and involution") {
    std::vector<Rational> ones(6, Rational(1));
    CHECK(binomial_transform(ones, 3) == Rational(0));
    std::vector<Rational> hs;
    for (long k = 0; k <= 5; ++k) hs.push_back(harmonic(k));
    CHECK(binomial_transform(hs, 3) == Rational(-1, 3));
    std::vector<Rational> idseq{Rational(0), Rational(1)};
    CHECK(binomial_transform(idseq, 1) == Rational(-1));

    std::mt19937_64 rng(31337);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<Rational> a;
        long len = 5 + static_cast<long>(rng() % 21);
        for (long i = 0; i < len; ++i)
            a.push_back(Rational(static_cast<long>(rng() % 200) - 100,
                                 1 + static_cast<long>(rng() % 30)));
        std::vector<Rational> once;
        for (long n = 0; n < len; ++n) once.push_back(binomial_transform(a, n));
        for (long n = 0; n < len; ++n)
            CHECK(binomial_transform(once, n) == a[static_cast<size_t>(n)]);
    }
}

TEST_CASE("declared transform pairs crosscheck exactly") {
    GridSpec g;
    g.n_min = 1;
    g.n_max = 20;
    g.b_values = {Rational(1), Rational(2), Rational(3)};
    g.c_values = {Rational(1)};
    auto rep = transform_crosscheck("eq.jm6rck7", "eq.u1t9s6r", g);
    CHECK(rep.ok());
    CHECK(rep.passed() == 20);

    GridSpec g2 = g;
    g2.n_max = 10;
    g2.b_values = {Rational(3)};
    auto rep2 = transform_crosscheck("main_id1", "main_id1b", g2);
    CHECK(rep2.ok());
    CHECK(rep2.passed() > 0);

    CHECK_THROWS_AS(transform_crosscheck("Id_Frisch", "eq.jm6rck7", g),
                    hf::UnknownIdentityError);
}

TEST_CASE("every declared transform pair passes") {
    GridSpec g;
    g.n_min = 1;
    g.n_max = 12;
    g.b_values = {Rational(1), Rational(2)};
    g.c_values = {Rational(1)};
    int pairs = 0;
    for (const auto& d : list_identities()) {
        for (const auto& rel : d.relations) {
            if (!rel.transform) continue;
            auto rep = transform_crosscheck(rel.target, d.id, g);
            INFO(d.id, " <- ", rel.target, ": ", rep.summary());
            CHECK(rep.ok());
            CHECK(rep.passed() > 0);
            ++pairs;
        }
    }
    CHECK(pairs >= 12);
}

TEST_CASE("derivative consistency at interior bindings") {
    std::vector<Rational> hs{Rational(1, 8), Rational(1, 16), Rational(1, 32)};
    {
        Binding t{3, Rational(2), Rational(1), {}};
        auto rep = derivative_consistency("Id_Frisch", "main_id1", t, hs, Precision::bits(96));
        INFO(rep.instances[0].note, " | ", rep.instances[1].note);
        CHECK(rep.ok());
    }
    {
        Binding t{2, Rational(3, 2), {}, {}};
        auto rep =
            derivative_consistency("main_id22", "eq.soe68bj", t, hs, Precision::bits(96));
        CHECK(rep.ok());
    }
    {
        Binding t{1, Rational(2), {}, {}};
        auto rep = derivative_consistency("cor_id1", "eq.ufus43q", t, hs, Precision::bits(96));
        CHECK(rep.ok());
    }
    CHECK_THROWS_AS(derivative_consistency("Id_Frisch", "eq.jm6rck7",
                                           Binding{2, Rational(2), Rational(1), {}}, hs,
                                           Precision::bits(64)),
                    hf::UnknownIdentityError);
}

TEST_CASE("m-th power sums without direct summation") {
    CHECK(mth_power_sum_closed_form(1, 1, 3) == Rational(7, 8));
    CHECK(mth_power_sum_closed_form(3, 1, 2) == Rational(25, 48));
    for (long n = 1; n <= 6; ++n)
        for (long b = 1; b <= 3; ++b)
            CHECK(mth_power_sum_closed_form(n, b, 1) ==
                  Rational(1, b) / binomial_int(n + b, b));
    // brute-force oracle on a smaller box (the acceptance suite runs the full one)
    for (long n = 1; n <= 8; ++n) {
        for (long b = 1; b <= 3; ++b) {
            for (long m = 1; m <= 4; ++m) {
                Rational direct(0);
                for (long k = 0; k <= n; ++k)
                    direct += neg1pow(k) * binomial_int(n, k) / (Rational(b + k)).pow(m);
                CHECK(mth_power_sum_closed_form(n, b, m) == direct);
            }
        }
    }
}

TEST_CASE("m-th power sum enclosure at rational b") {
    for (auto [n, m] : {std::pair{3L, 2L}, {4L, 3L}, {2L, 5L}}) {
        for (const Rational& b : {Rational(7, 3), Rational(1, 2), Rational(5, 4)}) {
            Rational direct(0);
            for (long k = 0; k <= n; ++k)
                direct += neg1pow(k) * binomial_int(n, k) / (b + Rational(k)).pow(m);
            hf::Interval enc = mth_power_sum_enclosure(n, b, m, Precision::bits(64));
            CHECK(enc.contains(direct));
            CHECK(enc.width() <= pow2(-64));
        }
    }
    // integer b agrees with the exact closed form
    CHECK(mth_power_sum_enclosure(5, Rational(2), 4, Precision::bits(64))
              .contains(mth_power_sum_closed_form(5, 2, 4)));
}

TEST_CASE("the two split identities sum to the base fraction identity") {
    RatCtx cx;
    const auto& split_b = get_identity("remark_split_b");
    const auto& split_k = get_identity("remark_split_k");
    const auto& frac = get_identity("binomial_frac_id");
    for (long n = 0; n <= 30; ++n) {
        for (long b = 1; b <= 6; ++b) {
            Binding t{n, Rational(b), {}, {}};
            CHECK(evaluate_rhs(split_b, cx, t) + evaluate_rhs(split_k, cx, t) ==
                  evaluate_rhs(frac, cx, t));
            CHECK(evaluate_lhs(split_b, cx, t) + evaluate_lhs(split_k, cx, t) ==
                  evaluate_lhs(frac, cx, t));
        }
    }
}
