#include "hf/registry.hpp"
#include "hf/verify.hpp"

// One descriptor per catalogued identity, in source order. Summands and
// closed forms are written once as generic lambdas and instantiated for the
// exact-rational, constant-ring, and interval backends.

namespace hf {

namespace {

using R = Rational;

constexpr BackendSet BE_RAT = static_cast<unsigned>(Backend::ExactRational);
constexpr BackendSet BE_RING = static_cast<unsigned>(Backend::ExactRing);
constexpr BackendSet BE_IVAL = static_cast<unsigned>(Backend::Interval);
constexpr BackendSet BE_ALL = BE_RAT | BE_RING | BE_IVAL;
constexpr BackendSet BE_RI = BE_RAT | BE_IVAL;
constexpr BackendSet BE_GI = BE_RING | BE_IVAL;
// Rational-valued identities from the odd-harmonic catalog run in all three
// backends so the ring grid covers them.
constexpr BackendSet BE_ODD = BE_ALL;

bool not_neg_int(const R& x) { return !(x.is_integer() && x.sign() < 0); }

std::pair<long, long> range_0n(const Binding& t) { return {0, t.n}; }
std::pair<long, long> range_1n(const Binding& t) { return {1, t.n}; }
std::pair<long, long> range_pt(const Binding&) { return {0, 0}; }

IdentityDescriptor make(std::string id, std::string statement, ParamSig sig, BackendSet be,
                        std::function<bool(const Binding&)> dom,
                        std::function<std::pair<long, long>(const Binding&)> range,
                        SummandFn summand, ValueFn rhs, std::vector<Relation> rels = {},
                        std::string source = "") {
    IdentityDescriptor d;
    d.id = std::move(id);
    d.statement = std::move(statement);
    d.source = std::move(source);
    d.params = sig;
    d.backends = be;
    d.domain = std::move(dom);
    d.lhs_range = std::move(range);
    d.lhs_summand = std::move(summand);
    d.rhs = std::move(rhs);
    d.relations = std::move(rels);
    return d;
}

Relation deriv_b(std::string target, long lam, std::optional<ValueFn> mu = {}) {
    Relation r{RelationKind::DerivativeInBOf, std::move(target), "", DerivCheck{R(lam), std::move(mu)}, {}};
    return r;
}

Relation deriv_c(std::string target, long lam) {
    return {RelationKind::DerivativeInCOf, std::move(target), "", DerivCheck{R(lam), {}}, {}};
}

Relation spec_of(std::string target, std::string note) {
    return {RelationKind::Specializes, std::move(target), std::move(note), {}, {}};
}

Relation xform(RelationKind kind, std::string target, ValueFn phi,
               std::optional<ValueFn> rho = {}) {
    return {kind, std::move(target), "", {}, TransformCheck{std::move(phi), std::move(rho)}};
}

ValueFn phi_const(long v) {
    return ValueFn([v](auto& cx, const Binding&) { return cx.embed(R(v)); });
}

}  // namespace

std::vector<IdentityDescriptor> build_catalog() {
    std::vector<IdentityDescriptor> v;
    v.reserve(80);

    // ------------------------------------------------------ the root identity
    v.push_back(make(
        "Id_Frisch",
        "sum_{k=0..n} (-1)^k C(n,k)/C(b+k,c) = c/(n+c) * 1/C(n+b,b-c)",
        {true, true, false}, BE_ALL,
        [](const Binding& t) {
            return t.n >= 1 && not_neg_int(t.b_val()) && not_neg_int(t.c_val()) &&
                   not_neg_int(t.b_val() - t.c_val());
        },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k) * binomial_int(t.n, k)) /
                   cx.binom(t.b_val() + R(k), t.c_val());
        }),
        ValueFn([](auto& cx, const Binding& t) {
            return cx.embed(t.c_val() / (R(t.n) + t.c_val())) /
                   cx.binom(R(t.n) + t.b_val(), t.b_val() - t.c_val());
        }),
        {}, "Frisch; Gould, Combinatorial Identities, 4.2"));

    // -------------------------------------------- first derivative family in b
    v.push_back(make(
        "main_id1",
        "sum_{k=0..n} (-1)^k C(n,k)/C(b+k,c) (H_{k+b}-H_{k+b-c}) = "
        "c/(n+c) (H_{n+b}-H_{b-c})/C(n+b,n+c)",
        {true, true, false}, BE_ALL,
        [](const Binding& t) {
            return t.n >= 1 && not_neg_int(t.b_val()) && not_neg_int(t.c_val()) &&
                   not_neg_int(t.b_val() - t.c_val());
        },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            auto dh = cx.harmonic(t.b_val() + R(k)) - cx.harmonic(t.b_val() - t.c_val() + R(k));
            return (dh * (neg1pow(k) * binomial_int(t.n, k))) /
                   cx.binom(t.b_val() + R(k), t.c_val());
        }),
        ValueFn([](auto& cx, const Binding& t) {
            auto dh = cx.harmonic(R(t.n) + t.b_val()) - cx.harmonic(t.b_val() - t.c_val());
            return (dh * (t.c_val() / (R(t.n) + t.c_val()))) /
                   cx.binom(R(t.n) + t.b_val(), R(t.n) + t.c_val());
        }),
        {deriv_b("Id_Frisch", -1)}));

    v.push_back(make(
        "main_id1b",
        "sum_{k=0..n} (-1)^k C(n,k) c/(k+c) (H_{k+b}-H_{b-c})/C(k+b,k+c) = "
        "(H_{n+b}-H_{n+b-c})/C(b+n,c)",
        {true, true, false}, BE_ALL,
        [](const Binding& t) {
            return t.n >= 1 && not_neg_int(t.b_val()) && not_neg_int(t.c_val()) &&
                   !t.c_val().is_zero() && not_neg_int(t.b_val() - t.c_val());
        },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            auto dh = cx.harmonic(t.b_val() + R(k)) - cx.harmonic(t.b_val() - t.c_val());
            R coeff = neg1pow(k) * binomial_int(t.n, k) * t.c_val() / (R(k) + t.c_val());
            return (dh * coeff) / cx.binom(t.b_val() + R(k), t.c_val() + R(k));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            auto dh = cx.harmonic(R(t.n) + t.b_val()) -
                      cx.harmonic(R(t.n) + t.b_val() - t.c_val());
            return dh / cx.binom(t.b_val() + R(t.n), t.c_val());
        }),
        {xform(RelationKind::BinomialTransformOf, "main_id1", phi_const(1))}));

    v.push_back(make(
        "main_id11",
        "sum_{k=0..n} (-1)^k C(n,k)/C(b+k,k) (H_{k+b}-H_k) = b/(n+b) H_{n+b}",
        {true, false, false}, BE_ALL,
        [](const Binding& t) { return t.n >= 1 && not_neg_int(t.b_val()); },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            auto dh = cx.harmonic(t.b_val() + R(k)) - cx.harmonic(R(k));
            return (dh * (neg1pow(k) * binomial_int(t.n, k))) /
                   cx.binom(t.b_val() + R(k), R(k));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            return cx.harmonic(R(t.n) + t.b_val()) * (t.b_val() / (R(t.n) + t.b_val()));
        }),
        {spec_of("main_id1", "c = b")}));

    v.push_back(make(
        "main_id11b",
        "sum_{k=0..n} (-1)^k C(n,k) H_{k+b}/(k+b) = (H_{n+b}-H_n)/(b C(b+n,b))",
        {true, false, false}, BE_ALL,
        [](const Binding& t) {
            return t.n >= 1 && not_neg_int(t.b_val()) && !t.b_val().is_zero();
        },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            R coeff = neg1pow(k) * binomial_int(t.n, k) / (R(k) + t.b_val());
            return cx.harmonic(t.b_val() + R(k)) * coeff;
        }),
        ValueFn([](auto& cx, const Binding& t) {
            auto dh = cx.harmonic(R(t.n) + t.b_val()) - cx.harmonic(R(t.n));
            return (dh * t.b_val().reciprocal()) / cx.binom(t.b_val() + R(t.n), t.b_val());
        }),
        {spec_of("main_id1b", "c = b"),
         xform(RelationKind::BinomialTransformOf, "main_id11",
               ValueFn([](auto& cx, const Binding& t) { return cx.embed(t.b_val()); }))}));

    // --------------------------------------- inverse-square specialization, c=1
    v.push_back(make(
        "cor_id1",
        "sum_{k=0..n} (-1)^k C(n,k)/(b+k)^2 = 1/(n+1) (H_{n+b}-H_{b-1})/C(n+b,n+1)",
        {true, false, false}, BE_ALL,
        [](const Binding& t) {
            return t.n >= 1 && not_neg_int(t.b_val()) && !t.b_val().is_zero();
        },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k) * binomial_int(t.n, k) / (t.b_val() + R(k)).pow(2));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            auto dh = cx.harmonic(R(t.n) + t.b_val()) - cx.harmonic(t.b_val() - R(1));
            return (dh * R(1, t.n + 1)) / cx.binom(R(t.n) + t.b_val(), R(t.n + 1));
        }),
        {spec_of("main_id1", "c = 1")}));

    v.push_back(make(
        "cor_id1_b1",
        "sum_{k=0..n} (-1)^k C(n,k)/(k+1)^2 = H_{n+1}/(n+1)",
        {false, false, false}, BE_RI,
        [](const Binding& t) { return t.n >= 1; },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k) * binomial_int(t.n, k) / R((k + 1) * (k + 1)));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            return cx.embed(harmonic(t.n + 1) / R(t.n + 1));
        }),
        {spec_of("cor_id1", "b = 1")}));

    // -------------------------------------------- first derivative family in c
    v.push_back(make(
        "main_id2",
        "sum_{k=0..n} (-1)^{k+1} C(n,k)/C(b+k,c) (H_{k+b-c}-H_c) = "
        "(n/(n+c) + c(H_{n+c}-H_{b-c})) / ((n+c) C(n+b,n+c))",
        {true, true, false}, BE_ALL,
        [](const Binding& t) {
            return t.n >= 1 && not_neg_int(t.b_val()) && not_neg_int(t.c_val()) &&
                   not_neg_int(t.b_val() - t.c_val());
        },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            auto dh = cx.harmonic(t.b_val() - t.c_val() + R(k)) - cx.harmonic(t.c_val());
            return (dh * (neg1pow(k + 1) * binomial_int(t.n, k))) /
                   cx.binom(t.b_val() + R(k), t.c_val());
        }),
        ValueFn([](auto& cx, const Binding& t) {
            auto dh = cx.harmonic(R(t.n) + t.c_val()) - cx.harmonic(t.b_val() - t.c_val());
            auto num = dh * t.c_val() + cx.embed(R(t.n) / (R(t.n) + t.c_val()));
            return num / (cx.binom(R(t.n) + t.b_val(), R(t.n) + t.c_val()) *
                          (R(t.n) + t.c_val()));
        }),
        {deriv_c("Id_Frisch", 1)}));

    v.push_back(make(
        "main_id22",
        "sum_{k=0..n} (-1)^{k+1} C(n,k) H_{k+b} = 1/(n C(n+b,n))",
        {true, false, false}, BE_ALL,
        [](const Binding& t) { return t.n >= 1 && not_neg_int(t.b_val()); },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.harmonic(t.b_val() + R(k)) * (neg1pow(k + 1) * binomial_int(t.n, k));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            return cx.embed(R(1, t.n)) / cx.binom(R(t.n) + t.b_val(), R(t.n));
        }),
        {spec_of("main_id2", "c = 0")}));

    v.push_back(make(
        "main_id22_b0",
        "sum_{k=0..n} (-1)^k C(n,k) H_k = -1/n",
        {false, false, false}, BE_RI,
        [](const Binding& t) { return t.n >= 1; },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k) * binomial_int(t.n, k) * harmonic(k));
        }),
        ValueFn([](auto& cx, const Binding& t) { return cx.embed(R(-1, t.n)); }),
        {spec_of("main_id22", "b = 0")}, "Boyadzhiev, Notes on the Binomial Transforms"));

    // ------------------------------------------------ shifted harmonic differences
    v.push_back(make(
        "eq.auhzvb5",
        "sum_{k=1..n} (-1)^{k+1} C(n,k)/(k C(k+b,k)) = H_{n+b} - H_b",
        {true, false, false}, BE_ALL,
        [](const Binding& t) { return t.n >= 0 && not_neg_int(t.b_val()); },
        range_1n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k + 1) * binomial_int(t.n, k) / R(k)) /
                   cx.binom(R(k) + t.b_val(), R(k));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            return cx.harmonic(R(t.n) + t.b_val()) - cx.harmonic(t.b_val());
        })));

    v.push_back(make(
        "eq.auhzvb5_bn",
        "sum_{k=1..n} (-1)^{k+1} C(n,k)/(k C(k+n,k)) = H_{2n} - H_n",
        {false, false, false}, BE_RI,
        [](const Binding& t) { return t.n >= 0; },
        range_1n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k + 1) * binomial_int(t.n, k) /
                            (R(k) * binomial_int(k + t.n, k)));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            return cx.embed(harmonic(2 * t.n) - harmonic(t.n));
        }),
        {spec_of("eq.auhzvb5", "b = n")}));

    // --------------------------------------------- harmonic-weighted forms at c=b
    v.push_back(make(
        "cor_id2",
        "sum_{k=0..n} (-1)^k C(n,k)/C(k+b,k) H_{k+b} = b/(n+b) H_b - n/(n+b)^2",
        {true, false, false}, BE_ALL,
        [](const Binding& t) { return t.n >= 1 && not_neg_int(t.b_val()); },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return (cx.harmonic(t.b_val() + R(k)) * (neg1pow(k) * binomial_int(t.n, k))) /
                   cx.binom(R(k) + t.b_val(), R(k));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            R nb = R(t.n) + t.b_val();
            return cx.harmonic(t.b_val()) * (t.b_val() / nb) -
                   cx.embed(R(t.n) / (nb * nb));
        }),
        {spec_of("main_id2", "c = b")}));

    v.push_back(make(
        "eq.twi4acl",
        "sum_{k=0..n} (-1)^k C(n,k)/C(b+k,k) = b/(n+b)",
        {true, false, false}, BE_ALL,
        [](const Binding& t) { return t.n >= 1 && not_neg_int(t.b_val()); },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k) * binomial_int(t.n, k)) /
                   cx.binom(t.b_val() + R(k), R(k));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            return cx.embed(t.b_val() / (R(t.n) + t.b_val()));
        })));

    // ------------------------------- split fractions and the base fraction identity
    v.push_back(make(
        "cor_id3",
        "sum_{k=1..n} (-1)^{k+1} C(n,k) k/(k+b)^2 = (H_{n+b}-H_b)/C(n+b,n)",
        {true, false, false}, BE_ALL,
        [](const Binding& t) { return t.n >= 0 && not_neg_int(t.b_val()); },
        range_1n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k + 1) * binomial_int(t.n, k) * R(k) /
                            (t.b_val() + R(k)).pow(2));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            auto dh = cx.harmonic(R(t.n) + t.b_val()) - cx.harmonic(t.b_val());
            return dh / cx.binom(R(t.n) + t.b_val(), R(t.n));
        })));

    v.push_back(make(
        "cor_id3_bn",
        "sum_{k=1..n} (-1)^{k+1} C(n,k) k/(k+n)^2 = (H_{2n}-H_n)/C(2n,n)",
        {false, false, false}, BE_RI,
        [](const Binding& t) { return t.n >= 0; },
        range_1n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k + 1) * binomial_int(t.n, k) * R(k) /
                            R((k + t.n) * (k + t.n)));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            return cx.embed((harmonic(2 * t.n) - harmonic(t.n)) / binomial_int(2 * t.n, t.n));
        }),
        {spec_of("cor_id3", "b = n")}));

    v.push_back(make(
        "binomial_frac_id",
        "sum_{k=0..n} (-1)^k C(n,k)/(k+b) = 1/(b C(n+b,b))",
        {true, false, false}, BE_ALL,
        [](const Binding& t) {
            return t.n >= 0 && not_neg_int(t.b_val()) && !t.b_val().is_zero();
        },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k) * binomial_int(t.n, k) / (R(k) + t.b_val()));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            return cx.embed(t.b_val().reciprocal()) /
                   cx.binom(R(t.n) + t.b_val(), t.b_val());
        })));

    v.push_back(make(
        "remark_split_b",
        "sum_{k=0..n} (-1)^k C(n,k) b/(b+k)^2 = (H_{n+b}-H_{b-1})/C(n+b,n)",
        {true, false, false}, BE_ALL,
        [](const Binding& t) {
            return t.n >= 0 && not_neg_int(t.b_val()) && !t.b_val().is_zero();
        },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k) * binomial_int(t.n, k) * t.b_val() /
                            (t.b_val() + R(k)).pow(2));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            auto dh = cx.harmonic(R(t.n) + t.b_val()) - cx.harmonic(t.b_val() - R(1));
            return dh / cx.binom(R(t.n) + t.b_val(), R(t.n));
        })));

    v.push_back(make(
        "remark_split_k",
        "sum_{k=0..n} (-1)^k C(n,k) k/(b+k)^2 = (H_b-H_{n+b})/C(n+b,n)",
        {true, false, false}, BE_ALL,
        [](const Binding& t) {
            return t.n >= 0 && not_neg_int(t.b_val()) && !t.b_val().is_zero();
        },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k) * binomial_int(t.n, k) * R(k) /
                            (t.b_val() + R(k)).pow(2));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            auto dh = cx.harmonic(t.b_val()) - cx.harmonic(R(t.n) + t.b_val());
            return dh / cx.binom(R(t.n) + t.b_val(), R(t.n));
        })));

    // ----------------------------------------------------------- H_k-weighted form
    v.push_back(make(
        "eq.hzbwh6o",
        "sum_{k=0..n} (-1)^{k-1} C(n,k)/C(b+k,k) H_k = b/(n+b)(H_{n+b}-H_b) + n/(n+b)^2",
        {true, false, false}, BE_ALL,
        [](const Binding& t) { return t.n >= 1 && not_neg_int(t.b_val()); },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k + 1) * binomial_int(t.n, k) * harmonic(k)) /
                   cx.binom(t.b_val() + R(k), R(k));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            R nb = R(t.n) + t.b_val();
            auto dh = cx.harmonic(nb) - cx.harmonic(t.b_val());
            return dh * (t.b_val() / nb) + cx.embed(R(t.n) / (nb * nb));
        }),
        {spec_of("main_id2", "c = b, combined with eq.twi4acl")}));

    // -------------------------------------------------------------- inverse cubes
    v.push_back(make(
        "eq.ufus43q",
        "sum_{k=0..n} (-1)^k C(n,k)/(k+b)^3 = "
        "((H_{n+b}-H_{b-1})^2 - H2_{b-1} + H2_{n+b}) / ((2n+2) C(n+b,n+1))",
        {true, false, false}, BE_ALL,
        [](const Binding& t) {
            return t.n >= 0 && not_neg_int(t.b_val()) && !t.b_val().is_zero();
        },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k) * binomial_int(t.n, k) / (t.b_val() + R(k)).pow(3));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            auto dh = cx.harmonic(R(t.n) + t.b_val()) - cx.harmonic(t.b_val() - R(1));
            auto num = dh * dh - cx.harmonic2(t.b_val() - R(1)) +
                       cx.harmonic2(R(t.n) + t.b_val());
            return num / (cx.binom(R(t.n) + t.b_val(), R(t.n + 1)) * R(2 * t.n + 2));
        }),
        {deriv_b("cor_id1", -2)}));

    v.push_back(make(
        "Bai_id",
        "sum_{k=0..n} (-1)^k C(n,k)/(k+1)^3 = (H_{n+1}^2 + H2_{n+1})/(2n+2)",
        {false, false, false}, BE_RI,
        [](const Binding& t) { return t.n >= 0; },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k) * binomial_int(t.n, k) / R((k + 1) * (k + 1) * (k + 1)));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            R h = harmonic(t.n + 1);
            return cx.embed((h * h + gen_harmonic(t.n + 1, 2)) / R(2 * t.n + 2));
        }),
        {spec_of("eq.ufus43q", "b = 1")}, "Bai-Luo"));

    // ------------------------------------------------- second-order harmonic forms
    v.push_back(make(
        "eq.soe68bj",
        "sum_{k=0..n} (-1)^{k-1} C(n,k) H2_{k+b} = (H_{n+b}-H_b)/(n C(n+b,n))",
        {true, false, false}, BE_ALL,
        [](const Binding& t) { return t.n >= 1 && not_neg_int(t.b_val()); },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.harmonic2(t.b_val() + R(k)) * (neg1pow(k + 1) * binomial_int(t.n, k));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            auto dh = cx.harmonic(R(t.n) + t.b_val()) - cx.harmonic(t.b_val());
            return (dh * R(1, t.n)) / cx.binom(R(t.n) + t.b_val(), R(t.n));
        }),
        {deriv_b("main_id22", -1)}));

    v.push_back(make(
        "eq.lht3ics",
        "sum_{k=1..n} (-1)^{k-1} C(n,k) (H_{k+b}-H_b)/(k C(k+b,k)) = H2_{n+b} - H2_b",
        {true, false, false}, BE_ALL,
        [](const Binding& t) { return t.n >= 0 && not_neg_int(t.b_val()); },
        range_1n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            auto dh = cx.harmonic(t.b_val() + R(k)) - cx.harmonic(t.b_val());
            return (dh * (neg1pow(k + 1) * binomial_int(t.n, k) / R(k))) /
                   cx.binom(R(k) + t.b_val(), R(k));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            return cx.harmonic2(R(t.n) + t.b_val()) - cx.harmonic2(t.b_val());
        }),
        {xform(RelationKind::InverseTransformOf, "eq.soe68bj", phi_const(-1),
               ValueFn([](auto& cx, const Binding& t) {
                   return cx.harmonic2(t.b_val()) * R(-1);
               }))}));

    v.push_back(make(
        "eq.qr5oi89",
        "sum_{k=1..n} (-1)^{k-1} C(n,k) H_{k+b}/(k C(k+b,k)) = "
        "(H_{n+b}-H_b) H_b + H2_{n+b} - H2_b",
        {true, false, false}, BE_ALL,
        [](const Binding& t) { return t.n >= 0 && not_neg_int(t.b_val()); },
        range_1n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return (cx.harmonic(t.b_val() + R(k)) *
                    (neg1pow(k + 1) * binomial_int(t.n, k) / R(k))) /
                   cx.binom(R(k) + t.b_val(), R(k));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            auto dh = cx.harmonic(R(t.n) + t.b_val()) - cx.harmonic(t.b_val());
            return dh * cx.harmonic(t.b_val()) + cx.harmonic2(R(t.n) + t.b_val()) -
                   cx.harmonic2(t.b_val());
        }),
        {spec_of("eq.lht3ics", "combined with eq.auhzvb5")}));

    // ----------------------------------------------------- H_k H_{k+b} product forms
    v.push_back(make(
        "eq.iauweap",
        "sum_{k=0..n} (-1)^{k-1} C(n,k)/C(b+k,b) H_k H_{k+b} = "
        "(b H_b - n/(n+b))(H_{n+b}-H_b)/(n+b) + b(H2_{n+b}-H2_b)/(n+b) + "
        "n(2/(n+b) + H_b)/(n+b)^2",
        {true, false, false}, BE_ALL,
        [](const Binding& t) { return t.n >= 1 && not_neg_int(t.b_val()); },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            auto prod = cx.harmonic(R(k)) * cx.harmonic(t.b_val() + R(k));
            return (prod * (neg1pow(k + 1) * binomial_int(t.n, k))) /
                   cx.binom(t.b_val() + R(k), t.b_val());
        }),
        ValueFn([](auto& cx, const Binding& t) {
            R nb = R(t.n) + t.b_val();
            auto hb = cx.harmonic(t.b_val());
            auto dh = cx.harmonic(nb) - hb;
            auto dh2 = cx.harmonic2(nb) - cx.harmonic2(t.b_val());
            auto term1 = (hb * t.b_val() - cx.embed(R(t.n) / nb)) * dh * nb.reciprocal();
            auto term2 = dh2 * (t.b_val() / nb);
            auto term3 = (hb + cx.embed(R(2) / nb)) * (R(t.n) / (nb * nb));
            return term1 + term2 + term3;
        }),
        {deriv_b("eq.hzbwh6o", -1,
                 ValueFn([](auto& cx, const Binding& t) { return cx.harmonic(t.b_val()); }))}));

    v.push_back(make(
        "id_Hk_squared",
        "sum_{k=0..n} (-1)^k C(n,k) H_k^2 = H_n/n - 2/n^2",
        {false, false, false}, BE_RI,
        [](const Binding& t) { return t.n >= 1; },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            R h = harmonic(k);
            return cx.embed(neg1pow(k) * binomial_int(t.n, k) * h * h);
        }),
        ValueFn([](auto& cx, const Binding& t) {
            return cx.embed(harmonic(t.n) / R(t.n) - R(2, t.n * t.n));
        }),
        {spec_of("eq.iauweap", "b = 0")}, "also Batir, Identity 18"));

    v.push_back(make(
        "id_HkHkn",
        "sum_{k=0..n} (-1)^{k-1} C(n,k)/C(n+k,k) H_k H_{k+n} = "
        "(H2_{2n}-H2_n)/2 + H_{2n}(H_n - 1/(2n))/2 - H_n H_{n-1}/2 + 1/(4n^2)",
        {false, false, false}, BE_RI,
        [](const Binding& t) { return t.n >= 1; },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k + 1) * binomial_int(t.n, k) * harmonic(k) *
                            harmonic(k + t.n) / binomial_int(t.n + k, k));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            long n = t.n;
            R val = (gen_harmonic(2 * n, 2) - gen_harmonic(n, 2)) / R(2) +
                    harmonic(2 * n) * (harmonic(n) - R(1, 2 * n)) / R(2) -
                    harmonic(n) * harmonic(n - 1) / R(2) + R(1, 4 * n * n);
            return cx.embed(val);
        }),
        {spec_of("eq.iauweap", "b = n")}));

    // ------------------------------------------------------------ H_k/k transform
    v.push_back(make(
        "eq.vsafq0i",
        "sum_{k=1..n} (-1)^{k-1} C(n,k) H_k/k = H2_n",
        {false, false, false}, BE_RI,
        [](const Binding& t) { return t.n >= 1; },
        range_1n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k + 1) * binomial_int(t.n, k) * harmonic(k) / R(k));
        }),
        ValueFn([](auto& cx, const Binding& t) { return cx.embed(gen_harmonic(t.n, 2)); }),
        {xform(RelationKind::BinomialTransformOf, "id_Hk_squared", phi_const(-1),
               ValueFn([](auto& cx, const Binding& t) {
                   R h = harmonic(t.n);
                   return cx.embed(h * h + gen_harmonic(t.n, 2));
               }))}));

    v.push_back(make(
        "boyadzhiev_k2",
        "sum_{k=1..n} (-1)^{k-1} C(n,k)/k^2 = (H_n^2 + H2_n)/2",
        {false, false, false}, BE_RI,
        [](const Binding& t) { return t.n >= 1; },
        range_1n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k + 1) * binomial_int(t.n, k) / R(k * k));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            R h = harmonic(t.n);
            return cx.embed((h * h + gen_harmonic(t.n, 2)) / R(2));
        }),
        {}, "Boyadzhiev, Notes on the Binomial Transforms, p. 64"));

    // ------------------------------------------- even/odd harmonic interleaving
    v.push_back(make(
        "eq.h9wjxs0a",
        "H_{2n} = H_n/2 + O_n",
        {false, false, false}, BE_ODD,
        [](const Binding& t) { return t.n >= 0; },
        range_pt,
        SummandFn([](auto& cx, const Binding& t, long) {
            return cx.embed(harmonic(2 * t.n));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            return cx.embed(harmonic(t.n) / R(2) + odd_harmonic(t.n));
        })));

    v.push_back(make(
        "eq.h9wjxs0b",
        "H_{2n-1} = H_{n-1}/2 + O_n",
        {false, false, false}, BE_ODD,
        [](const Binding& t) { return t.n >= 1; },
        range_pt,
        SummandFn([](auto& cx, const Binding& t, long) {
            return cx.embed(harmonic(2 * t.n - 1));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            return cx.embed(harmonic(t.n - 1) / R(2) + odd_harmonic(t.n));
        })));

    // Digamma-derived difference relations at half-integer arguments, as
    // exact ring identities.
    auto half_relation = [&](std::string id, std::string stmt, SummandFn lhs, ValueFn rhs) {
        v.push_back(make(std::move(id), std::move(stmt), {false, false, false}, BE_GI,
                         [](const Binding& t) { return t.n >= 0; }, range_pt, std::move(lhs),
                         std::move(rhs)));
    };
    half_relation("half_H_closed_form", "H_{n-1/2} = 2 O_n - 2 ln2",
           SummandFn([](auto& cx, const Binding& t, long) {
               return cx.harmonic(R(t.n) - R(1, 2));
           }),
           ValueFn([](auto& cx, const Binding& t) {
               return cx.embed(R(2) * odd_harmonic(t.n)) - cx.ln2() * R(2);
           }));
    half_relation("eq.plh634k", "H_{n-1/2} - H_{-1/2} = 2 O_n",
           SummandFn([](auto& cx, const Binding& t, long) {
               return cx.harmonic(R(t.n) - R(1, 2)) - cx.harmonic(R(-1, 2));
           }),
           ValueFn([](auto& cx, const Binding& t) {
               return cx.embed(R(2) * odd_harmonic(t.n));
           }));
    half_relation("half_H_diff_half", "H_{n-1/2} - H_{1/2} = 2(O_n - 1)",
           SummandFn([](auto& cx, const Binding& t, long) {
               return cx.harmonic(R(t.n) - R(1, 2)) - cx.harmonic(R(1, 2));
           }),
           ValueFn([](auto& cx, const Binding& t) {
               return cx.embed(R(2) * (odd_harmonic(t.n) - R(1)));
           }));
    half_relation("eq.ivi1ex5", "H_{n+1/2} - H_{-1/2} = 2 O_{n+1}",
           SummandFn([](auto& cx, const Binding& t, long) {
               return cx.harmonic(R(t.n) + R(1, 2)) - cx.harmonic(R(-1, 2));
           }),
           ValueFn([](auto& cx, const Binding& t) {
               return cx.embed(R(2) * odd_harmonic(t.n + 1));
           }));
    half_relation("half_H_plus_diff_half", "H_{n+1/2} - H_{1/2} = 2(O_{n+1} - 1)",
           SummandFn([](auto& cx, const Binding& t, long) {
               return cx.harmonic(R(t.n) + R(1, 2)) - cx.harmonic(R(1, 2));
           }),
           ValueFn([](auto& cx, const Binding& t) {
               return cx.embed(R(2) * (odd_harmonic(t.n + 1) - R(1)));
           }));
    half_relation("half_H_step", "H_{n+1/2} - H_{n-1/2} = 2/(2n+1)",
           SummandFn([](auto& cx, const Binding& t, long) {
               return cx.harmonic(R(t.n) + R(1, 2)) - cx.harmonic(R(t.n) - R(1, 2));
           }),
           ValueFn([](auto& cx, const Binding& t) {
               return cx.embed(R(2, 2 * t.n + 1));
           }));
    half_relation("eq.pobmr6h", "H_{n-1/2} - H_{-3/2} = 2(O_n - 1)",
           SummandFn([](auto& cx, const Binding& t, long) {
               return cx.harmonic(R(t.n) - R(1, 2)) - cx.harmonic(R(-3, 2));
           }),
           ValueFn([](auto& cx, const Binding& t) {
               return cx.embed(R(2) * (odd_harmonic(t.n) - R(1)));
           }));
    half_relation("half_H_plus_diff_m3half", "H_{n+1/2} - H_{-3/2} = 2(O_{n+1} - 1)",
           SummandFn([](auto& cx, const Binding& t, long) {
               return cx.harmonic(R(t.n) + R(1, 2)) - cx.harmonic(R(-3, 2));
           }),
           ValueFn([](auto& cx, const Binding& t) {
               return cx.embed(R(2) * (odd_harmonic(t.n + 1) - R(1)));
           }));

    // Gould's closed forms for binomial coefficients at half-integer
    // arguments; the dispatcher's falling-factorial route is the independent
    // left-hand side where one exists.
    v.push_back(make(
        "eq.cwrdtmu",
        "C(r+1/2,s) = C(2r+1,2s) C(r,s)^-1 2^-2s C(2s,s)   [r=n, s=b]",
        {true, false, false}, BE_ALL,
        [](const Binding& t) {
            const R& s = t.b_val();
            return t.n >= 0 && s.is_integer() && s.sign() >= 0 && s <= R(t.n);
        },
        range_pt,
        SummandFn([](auto& cx, const Binding& t, long) {
            return cx.binom(R(t.n) + R(1, 2), t.b_val());
        }),
        ValueFn([](auto& cx, const Binding& t) {
            long r = t.n, s = t.b_val().to_long();
            return cx.embed(binomial_int(2 * r + 1, 2 * s) / binomial_int(r, s) *
                            pow2(-2 * s) * binomial_int(2 * s, s));
        }),
        {}, "Gould Z.45"));

    v.push_back(make(
        "eq.s0t6h30",
        "C(r-1/2,s) = C(r,s) C(2r-2s,r-s)^-1 2^-2s C(2r,r)   [r=n, s=b]",
        {true, false, false}, BE_ALL,
        [](const Binding& t) {
            const R& s = t.b_val();
            return t.n >= 0 && s.is_integer() && s.sign() >= 0 && s <= R(t.n);
        },
        range_pt,
        SummandFn([](auto& cx, const Binding& t, long) {
            return cx.binom(R(t.n) - R(1, 2), t.b_val());
        }),
        ValueFn([](auto& cx, const Binding& t) {
            long r = t.n, s = t.b_val().to_long();
            return cx.embed(binomial_int(r, s) / binomial_int(2 * r - 2 * s, r - s) *
                            pow2(-2 * s) * binomial_int(2 * r, r));
        }),
        {}, "Gould Z.51"));

    v.push_back(make(
        "eq.dtwjzd8",
        "C(r,1/2) = 2^{2r+1} / (pi C(2r,r))   [r=n]",
        {false, false, false}, BE_GI,
        [](const Binding& t) { return t.n >= 0; },
        range_pt,
        SummandFn([](auto& cx, const Binding& t, long) {
            return cx.binom(R(t.n), R(1, 2));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            return cx.embed(pow2(2 * t.n + 1) / binomial_int(2 * t.n, t.n)) / cx.pi();
        }),
        {}, "Gould Z.48"));

    v.push_back(make(
        "eq.q3uie78",
        "C(r,-1/2) = 2^{2r+1} / (pi (2r+1) C(2r,r))   [r=n]",
        {false, false, false}, BE_GI,
        [](const Binding& t) { return t.n >= 0; },
        range_pt,
        SummandFn([](auto& cx, const Binding& t, long) {
            return cx.binom(R(t.n), R(-1, 2));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            return cx.embed(pow2(2 * t.n + 1) /
                            (R(2 * t.n + 1) * binomial_int(2 * t.n, t.n))) /
                   cx.pi();
        })));

    v.push_back(make(
        "eq.cm3vohl",
        "C(r-1/2,r+1) = -C(2r,r)/((r+1) 2^{2r+1})   [r=n]",
        {false, false, false}, BE_ALL,
        [](const Binding& t) { return t.n >= 0; },
        range_pt,
        SummandFn([](auto& cx, const Binding& t, long) {
            return cx.binom(R(t.n) - R(1, 2), R(t.n + 1));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            return cx.embed(R(-1, t.n + 1) * binomial_int(2 * t.n, t.n) *
                            pow2(-(2 * t.n + 1)));
        })));

    // ------------------------------------------------- odd-harmonic inverse squares
    v.push_back(make(
        "eq.main_odd1_1",
        "sum_{k=0..n} (-1)^k C(n,k)/(2k+1)^2 = 2^{2n+1}/(n+1) O_{n+1}/C(2n+2,n+1)",
        {false, false, false}, BE_ODD,
        [](const Binding& t) { return t.n >= 0; },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k) * binomial_int(t.n, k) / R((2 * k + 1) * (2 * k + 1)));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            long n = t.n;
            return cx.embed(pow2(2 * n + 1) / R(n + 1) * odd_harmonic(n + 1) /
                            binomial_int(2 * n + 2, n + 1));
        }),
        {spec_of("cor_id1", "b = 1/2")}));

    v.push_back(make(
        "eq.main_odd1_1_inv",
        "sum_{k=0..n} (-1)^k C(n,k) 2^{2k+1}/(k+1) O_{k+1}/C(2k+2,k+1) = 1/(2n+1)^2",
        {false, false, false}, BE_ODD,
        [](const Binding& t) { return t.n >= 0; },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k) * binomial_int(t.n, k) * pow2(2 * k + 1) / R(k + 1) *
                            odd_harmonic(k + 1) / binomial_int(2 * k + 2, k + 1));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            return cx.embed(R(1, (2 * t.n + 1) * (2 * t.n + 1)));
        }),
        {xform(RelationKind::InverseTransformOf, "eq.main_odd1_1", phi_const(1))}));

    v.push_back(make(
        "eq.cqklzqh",
        "sum_{k=0..n} (-1)^{k-1} C(n,k)/(2k-1)^2 = 2^{2n} (O_n - 1)/C(2n,n)",
        {false, false, false}, BE_ODD,
        [](const Binding& t) { return t.n >= 0; },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k + 1) * binomial_int(t.n, k) /
                            R((2 * k - 1) * (2 * k - 1)));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            return cx.embed(pow2(2 * t.n) * (odd_harmonic(t.n) - R(1)) /
                            binomial_int(2 * t.n, t.n));
        }),
        {spec_of("cor_id1", "b = -1/2")}));

    v.push_back(make(
        "eq.fhj2wwz",
        "sum_{k=0..n} (-1)^{k-1} C(n,k) 2^{2k} O_k/C(2k,k) = 2n/(2n-1)^2",
        {false, false, false}, BE_ODD,
        [](const Binding& t) { return t.n >= 0; },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k + 1) * binomial_int(t.n, k) * pow2(2 * k) *
                            odd_harmonic(k) / binomial_int(2 * k, k));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            return cx.embed(R(2 * t.n, (2 * t.n - 1) * (2 * t.n - 1)));
        }),
        {xform(RelationKind::InverseTransformOf, "eq.cqklzqh", phi_const(-1),
               ValueFn([](auto& cx, const Binding& t) {
                   return cx.embed(R(1, 2 * t.n - 1));
               }))}));

    v.push_back(make(
        "eq.xyz1",
        "sum_{k=0..n} (-1)^{k-1} C(n,k) 2^{2k}/C(2k,k) = 1/(2n-1)",
        {false, false, false}, BE_ODD,
        [](const Binding& t) { return t.n >= 0; },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k + 1) * binomial_int(t.n, k) * pow2(2 * k) /
                            binomial_int(2 * k, k));
        }),
        ValueFn([](auto& cx, const Binding& t) { return cx.embed(R(1, 2 * t.n - 1)); })));

    // ---------------------------------- odd harmonics with central binomial weights
    v.push_back(make(
        "eq.nh1vubi",
        "sum_{k=0..n} (-1)^{k+1} C(n,k) (2k-1) 2^{-2(k-1)} C(2(k-1),k-1) O_k = "
        "2^{-2(n-1)} C(2(n-1),n-1) (2n/(2n-1) - O_n)",
        {false, false, false}, BE_ODD,
        [](const Binding& t) { return t.n >= 0; },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k + 1) * binomial_int(t.n, k) * R(2 * k - 1) *
                            pow2(-2 * (k - 1)) * binomial_int(2 * (k - 1), k - 1) *
                            odd_harmonic(k));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            long n = t.n;
            return cx.embed(pow2(-2 * (n - 1)) * binomial_int(2 * (n - 1), n - 1) *
                            (R(2 * n, 2 * n - 1) - odd_harmonic(n)));
        }),
        {spec_of("main_id2", "limit b = -1, c = -1/2")}));

    v.push_back(make(
        "eq.nzxpc5c",
        "sum_{k=0..n} (-1)^{k+1} C(n,k) (2k+1) 2^{-2k} C(2k,k) O_{k+1} = "
        "C(2n,n) 2^{-2n}/(2n-1) ((4n-1)/(2n-1) - O_n)",
        {false, false, false}, BE_ODD,
        [](const Binding& t) { return t.n >= 0; },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k + 1) * binomial_int(t.n, k) * R(2 * k + 1) *
                            pow2(-2 * k) * binomial_int(2 * k, k) * odd_harmonic(k + 1));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            long n = t.n;
            return cx.embed(binomial_int(2 * n, n) * pow2(-2 * n) / R(2 * n - 1) *
                            (R(4 * n - 1, 2 * n - 1) - odd_harmonic(n)));
        }),
        {spec_of("main_id2", "b = 0, c = -1/2")}));

    v.push_back(make(
        "eq.pj6av0a",
        "sum_{k=0..n} (-1)^{k+1} C(n,k) 2^{-2k-2} C(2k+2,k+1) (O_{k+1}-1) = "
        "2^{-2n-2}/(2n+1) C(2n+2,n+1) (O_{n+1} - 1/(2n+1))",
        {false, false, false}, BE_ODD,
        [](const Binding& t) { return t.n >= 0; },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k + 1) * binomial_int(t.n, k) * pow2(-2 * k - 2) *
                            binomial_int(2 * k + 2, k + 1) * (odd_harmonic(k + 1) - R(1)));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            long n = t.n;
            return cx.embed(pow2(-2 * n - 2) / R(2 * n + 1) * binomial_int(2 * n + 2, n + 1) *
                            (odd_harmonic(n + 1) - R(1, 2 * n + 1)));
        }),
        {spec_of("main_id2", "b = 1, c = -1/2")}));

    v.push_back(make(
        "eq.zxdl17v",
        "sum_{k=0..n} (-1)^{k+1} C(n,k) 2^{-2k} C(2k,k) (O_k-1) = "
        "2^{-2n} C(2n,n) (2n/(2n+1) + O_{n+1})",
        {false, false, false}, BE_ODD,
        [](const Binding& t) { return t.n >= 0; },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k + 1) * binomial_int(t.n, k) * pow2(-2 * k) *
                            binomial_int(2 * k, k) * (odd_harmonic(k) - R(1)));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            long n = t.n;
            return cx.embed(pow2(-2 * n) * binomial_int(2 * n, n) *
                            (R(2 * n, 2 * n + 1) + odd_harmonic(n + 1)));
        }),
        {spec_of("main_id2", "b = 0, c = 1/2")}));

    // --------------------------------------------------- plain odd-harmonic sums
    v.push_back(make(
        "eq.jm6rck7",
        "sum_{k=1..n} (-1)^{k+1} C(n,k) O_k = 2^{2n-1}/(n C(2n,n))",
        {false, false, false}, BE_ODD,
        [](const Binding& t) { return t.n >= 1; },
        range_1n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k + 1) * binomial_int(t.n, k) * odd_harmonic(k));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            return cx.embed(pow2(2 * t.n - 1) / (R(t.n) * binomial_int(2 * t.n, t.n)));
        }),
        {spec_of("main_id22", "(b,c) = (-1/2,-1/2)")}));

    v.push_back(make(
        "eq.u1t9s6r",
        "sum_{k=1..n} (-1)^{k+1} C(n,k) 2^{2k-1}/(k C(2k,k)) = O_n",
        {false, false, false}, BE_ODD,
        [](const Binding& t) { return t.n >= 1; },
        range_1n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k + 1) * binomial_int(t.n, k) * pow2(2 * k - 1) /
                            (R(k) * binomial_int(2 * k, k)));
        }),
        ValueFn([](auto& cx, const Binding& t) { return cx.embed(odd_harmonic(t.n)); }),
        {xform(RelationKind::BinomialTransformOf, "eq.jm6rck7", phi_const(-1))}));

    v.push_back(make(
        "eq.fqnumdk",
        "sum_{k=0..n} (-1)^{k+1} C(n,k) O_{k+1} = 2^{2n-1}/(n(2n+1) C(2n,n))",
        {false, false, false}, BE_ODD,
        [](const Binding& t) { return t.n >= 1; },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k + 1) * binomial_int(t.n, k) * odd_harmonic(k + 1));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            long n = t.n;
            return cx.embed(pow2(2 * n - 1) /
                            (R(n) * R(2 * n + 1) * binomial_int(2 * n, n)));
        }),
        {spec_of("main_id22", "(b,c) = (1/2,-1/2)")}));

    v.push_back(make(
        "eq.b357dyz",
        "sum_{k=1..n} (-1)^{k+1} C(n,k) 2^{2k-1}/(k(2k+1) C(2k,k)) = O_{n+1} - 1",
        {false, false, false}, BE_ODD,
        [](const Binding& t) { return t.n >= 1; },
        range_1n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k + 1) * binomial_int(t.n, k) * pow2(2 * k - 1) /
                            (R(k) * R(2 * k + 1) * binomial_int(2 * k, k)));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            return cx.embed(odd_harmonic(t.n + 1) - R(1));
        }),
        {xform(RelationKind::BinomialTransformOf, "eq.fqnumdk", phi_const(-1),
               phi_const(-1))}));

    // ------------------------------------------------------ k-weighted odd squares
    v.push_back(make(
        "main_odd4_1",
        "sum_{k=1..n} (-1)^{k+1} C(n,k) k/(2k+1)^2 = 2^{2n-1}(O_{n+1}-1)/((2n+1) C(2n,n))",
        {false, false, false}, BE_ODD,
        [](const Binding& t) { return t.n >= 0; },
        range_1n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k + 1) * binomial_int(t.n, k) * R(k) /
                            R((2 * k + 1) * (2 * k + 1)));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            long n = t.n;
            return cx.embed(pow2(2 * n - 1) * (odd_harmonic(n + 1) - R(1)) /
                            (R(2 * n + 1) * binomial_int(2 * n, n)));
        }),
        {spec_of("cor_id3", "b = 1/2")}));

    v.push_back(make(
        "eq.main_odd4_2",
        "sum_{k=1..n} (-1)^{k+1} C(n,k) k/(2k-1)^2 = 2^{2n-1} O_n/C(2n,n)",
        {false, false, false}, BE_ODD,
        [](const Binding& t) { return t.n >= 0; },
        range_1n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k + 1) * binomial_int(t.n, k) * R(k) /
                            R((2 * k - 1) * (2 * k - 1)));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            return cx.embed(pow2(2 * t.n - 1) * odd_harmonic(t.n) /
                            binomial_int(2 * t.n, t.n));
        }),
        {spec_of("cor_id3", "b = -1/2")}));

    v.push_back(make(
        "main_odd4_3",
        "sum_{k=1..n} (-1)^{k-1} C(n,k) 2^{2k-1}(O_{k+1}-1)/((2k+1) C(2k,k)) = n/(2n+1)^2",
        {false, false, false}, BE_ODD,
        [](const Binding& t) { return t.n >= 0; },
        range_1n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k + 1) * binomial_int(t.n, k) * pow2(2 * k - 1) *
                            (odd_harmonic(k + 1) - R(1)) /
                            (R(2 * k + 1) * binomial_int(2 * k, k)));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            return cx.embed(R(t.n, (2 * t.n + 1) * (2 * t.n + 1)));
        }),
        {xform(RelationKind::InverseTransformOf, "main_odd4_1", phi_const(-1))}));

    v.push_back(make(
        "eq.hc2fi1o",
        "sum_{k=1..n} (-1)^{k+1} C(n,k) 2^{2k-1} O_k/C(2k,k) = n/(2n-1)^2",
        {false, false, false}, BE_ODD,
        [](const Binding& t) { return t.n >= 0; },
        range_1n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k + 1) * binomial_int(t.n, k) * pow2(2 * k - 1) *
                            odd_harmonic(k) / binomial_int(2 * k, k));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            return cx.embed(R(t.n, (2 * t.n - 1) * (2 * t.n - 1)));
        }),
        {xform(RelationKind::InverseTransformOf, "eq.main_odd4_2", phi_const(-1))}));

    // -------------------------------------- H_k sums with central binomial weights
    v.push_back(make(
        "eq.zmrbc4e",
        "sum_{k=0..n} (-1)^{k-1} C(n,k) 2^{2k} H_k/((2k+1) C(2k,k)) = "
        "2 O_{n+1}/(2n+1) - 2/(2n+1)^2",
        {false, false, false}, BE_ODD,
        [](const Binding& t) { return t.n >= 0; },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k + 1) * binomial_int(t.n, k) * pow2(2 * k) *
                            harmonic(k) / (R(2 * k + 1) * binomial_int(2 * k, k)));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            long n = t.n;
            return cx.embed(R(2) * odd_harmonic(n + 1) / R(2 * n + 1) -
                            R(2, (2 * n + 1) * (2 * n + 1)));
        }),
        {spec_of("eq.hzbwh6o", "b = 1/2")}));

    v.push_back(make(
        "eq.mtof7yp",
        "sum_{k=0..n} (-1)^k C(n,k) 2^{2k} H_k/C(2k,k) = 2 O_n/(2n-1) - 4n/(2n-1)^2",
        {false, false, false}, BE_ODD,
        [](const Binding& t) { return t.n >= 0; },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k) * binomial_int(t.n, k) * pow2(2 * k) * harmonic(k) /
                            binomial_int(2 * k, k));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            long n = t.n;
            return cx.embed(R(2) * odd_harmonic(n) / R(2 * n - 1) -
                            R(4 * n, (2 * n - 1) * (2 * n - 1)));
        }),
        {spec_of("eq.hzbwh6o", "b = -1/2")}));

    v.push_back(make(
        "eq.xxyyzz1",
        "sum_{k=0..n} (-1)^k C(n,k) O_{k+1}/(2k+1) = "
        "2^{2n+1} O_{n+1}/((n+1) C(2n+2,n+1)) - 2^{2n-1} H_n/((2n+1) C(2n,n))",
        {false, false, false}, BE_ODD,
        [](const Binding& t) { return t.n >= 0; },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k) * binomial_int(t.n, k) * odd_harmonic(k + 1) /
                            R(2 * k + 1));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            long n = t.n;
            return cx.embed(pow2(2 * n + 1) * odd_harmonic(n + 1) /
                                (R(n + 1) * binomial_int(2 * n + 2, n + 1)) -
                            pow2(2 * n - 1) * harmonic(n) /
                                (R(2 * n + 1) * binomial_int(2 * n, n)));
        }),
        {xform(RelationKind::InverseTransformOf, "eq.zmrbc4e", phi_const(2),
               ValueFn([](auto& cx, const Binding& t) {
                   long n = t.n;
                   return cx.embed(-pow2(2 * n + 2) * odd_harmonic(n + 1) /
                                   (R(n + 1) * binomial_int(2 * n + 2, n + 1)));
               }))}));

    v.push_back(make(
        "eq.xxyyzz2",
        "sum_{k=0..n} (-1)^k C(n,k) O_k/(2k-1) = 2^{2n-1}/C(2n,n) (H_n - 2 O_n)",
        {false, false, false}, BE_ODD,
        [](const Binding& t) { return t.n >= 0; },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k) * binomial_int(t.n, k) * odd_harmonic(k) /
                            R(2 * k - 1));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            long n = t.n;
            return cx.embed(pow2(2 * n - 1) / binomial_int(2 * n, n) *
                            (harmonic(n) - R(2) * odd_harmonic(n)));
        }),
        {xform(RelationKind::InverseTransformOf, "eq.mtof7yp", phi_const(2),
               ValueFn([](auto& cx, const Binding& t) {
                   long n = t.n;
                   return cx.embed(pow2(2 * n + 1) * odd_harmonic(n) /
                                   binomial_int(2 * n, n));
               }))}));

    v.push_back(make(
        "eq.yq8ibvs",
        "sum_{k=1..n} (-1)^{k-1} C(n,k) 2^{2k} H_{2k}/C(2k,k) = 4n/(2n-1)^2 - O_n/(2n-1)",
        {false, false, false}, BE_ODD,
        [](const Binding& t) { return t.n >= 0; },
        range_1n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k + 1) * binomial_int(t.n, k) * pow2(2 * k) *
                            harmonic(2 * k) / binomial_int(2 * k, k));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            long n = t.n;
            return cx.embed(R(4 * n, (2 * n - 1) * (2 * n - 1)) -
                            odd_harmonic(n) / R(2 * n - 1));
        }),
        {spec_of("eq.mtof7yp", "combined with eq.hc2fi1o via eq.h9wjxs0a")}));

    // ------------------------------------------------------------ odd inverse cubes
    v.push_back(make(
        "odd_cube",
        "sum_{k=0..n} (-1)^{k-1} C(n,k)/(2k-1)^3 = 2^{2n-1}/C(2n,n) ((O_n-1)^2 + O2_n + 1)",
        {false, false, false}, BE_ODD,
        [](const Binding& t) { return t.n >= 0; },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            long d = (2 * k - 1) * (2 * k - 1) * (2 * k - 1);
            return cx.embed(neg1pow(k + 1) * binomial_int(t.n, k) / R(d));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            long n = t.n;
            R om1 = odd_harmonic(n) - R(1);
            return cx.embed(pow2(2 * n - 1) / binomial_int(2 * n, n) *
                            (om1 * om1 + odd_gen_harmonic2(n) + R(1)));
        }),
        {spec_of("eq.ufus43q", "b = -1/2")}));

    v.push_back(make(
        "eq.cqhkqwq",
        "H2_{n-1/2} = -2 zeta(2) + 4 O2_n",
        {false, false, false}, BE_GI,
        [](const Binding& t) { return t.n >= 0; },
        range_pt,
        SummandFn([](auto& cx, const Binding& t, long) {
            return cx.harmonic2(R(t.n) - R(1, 2));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            return cx.zeta2() * R(-2) + cx.embed(R(4) * odd_gen_harmonic2(t.n));
        })));

    // -------------------------------------------- second-order odd-harmonic sums
    v.push_back(make(
        "eq.awov07j",
        "sum_{k=1..n} (-1)^{k-1} C(n,k) O2_k = 2^{2n-1}/C(2n,n) O_n/n",
        {false, false, false}, BE_ODD,
        [](const Binding& t) { return t.n >= 1; },
        range_1n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k + 1) * binomial_int(t.n, k) * odd_gen_harmonic2(k));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            long n = t.n;
            return cx.embed(pow2(2 * n - 1) / binomial_int(2 * n, n) * odd_harmonic(n) /
                            R(n));
        }),
        {spec_of("eq.soe68bj", "b = -1/2")}));

    v.push_back(make(
        "eq.y491lmb",
        "sum_{k=1..n} (-1)^{k-1} C(n,k) 2^{2k-1}/C(2k,k) O_k/k = O2_n",
        {false, false, false}, BE_ODD,
        [](const Binding& t) { return t.n >= 1; },
        range_1n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k + 1) * binomial_int(t.n, k) * pow2(2 * k - 1) /
                            binomial_int(2 * k, k) * odd_harmonic(k) / R(k));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            return cx.embed(odd_gen_harmonic2(t.n));
        }),
        {xform(RelationKind::InverseTransformOf, "eq.awov07j", phi_const(-1))}));

    // ------------------------------------------------------- H_k O_k product forms
    v.push_back(make(
        "odd_HkOk",
        "sum_{k=0..n} (-1)^{k-1} C(n,k) 2^{2k} H_k O_k/C(2k,k) = "
        "8n/(2n-1)^3 - 4n O_n/(2n-1)^2 - 2 O2_n/(2n-1)",
        {false, false, false}, BE_ODD,
        [](const Binding& t) { return t.n >= 0; },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k + 1) * binomial_int(t.n, k) * pow2(2 * k) *
                            harmonic(k) * odd_harmonic(k) / binomial_int(2 * k, k));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            long n = t.n;
            long d = 2 * n - 1;
            return cx.embed(R(8 * n) / R(d * d * d) -
                            R(4 * n) * odd_harmonic(n) / R(d * d) -
                            R(2) * odd_gen_harmonic2(n) / R(d));
        }),
        {spec_of("eq.iauweap", "b = -1/2")}));

    v.push_back(make(
        "eq.wsi7oju",
        "sum_{k=0..n} (-1)^k C(n,k) 2^{2k} H_k/C(2k,k) = 2 O_n/(2n-1) - 4n/(2n-1)^2",
        {false, false, false}, BE_ODD,
        [](const Binding& t) { return t.n >= 0; },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k) * binomial_int(t.n, k) * pow2(2 * k) * harmonic(k) /
                            binomial_int(2 * k, k));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            long n = t.n;
            return cx.embed(R(2) * odd_harmonic(n) / R(2 * n - 1) -
                            R(4 * n, (2 * n - 1) * (2 * n - 1)));
        }),
        {{RelationKind::Rediscovers, "eq.mtof7yp", "", {}, {}}}));

    // ----------------------------- the m-fold derivative family and product forms
    v.push_back(make(
        "peterson_product",
        "sum_{k=0..n} (-1)^k C(n,k) b/(k+b) = prod_{k=1..n} k/(b+k)",
        {true, false, false}, BE_RI,
        [](const Binding& t) {
            return t.n >= 0 && not_neg_int(t.b_val()) && !t.b_val().is_zero();
        },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k) * binomial_int(t.n, k) * t.b_val() /
                            (R(k) + t.b_val()));
        }),
        ValueFn([](auto& cx, const Binding& t) {
            R prod(1);
            for (long k = 1; k <= t.n; ++k) prod *= R(k) / (t.b_val() + R(k));
            return cx.embed(prod);
        }),
        {spec_of("binomial_frac_id", "product restatement")}, "Peterson; Nakata"));

    v.push_back(make(
        "peterson_squared",
        "sum_{k=0..n} (-1)^k C(n,k) (b/(b+k))^2 = "
        "prod_{k=1..n} k/(b+k) (1 + sum_{k=1..n} b/(b+k))",
        {true, false, false}, BE_RI,
        [](const Binding& t) {
            return t.n >= 0 && not_neg_int(t.b_val()) && !t.b_val().is_zero();
        },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            R f = t.b_val() / (t.b_val() + R(k));
            return cx.embed(neg1pow(k) * binomial_int(t.n, k) * f * f);
        }),
        ValueFn([](auto& cx, const Binding& t) {
            R prod(1), s(1);
            for (long k = 1; k <= t.n; ++k) {
                prod *= R(k) / (t.b_val() + R(k));
                s += t.b_val() / (t.b_val() + R(k));
            }
            return cx.embed(prod * s);
        }),
        {spec_of("cor_id1", "squared form")}, "Peterson"));

    v.push_back(make(
        "peterson_m_family",
        "sum_{k=0..n} (-1)^k C(n,k)/(b+k)^m = "
        "(-1)^{m-1}/(m-1)! d^{m-1}/db^{m-1} [1/(b C(n+b,b))]",
        {true, false, true}, BE_RI,
        [](const Binding& t) {
            return t.n >= 0 && t.m_val() >= 1 && not_neg_int(t.b_val()) &&
                   !t.b_val().is_zero();
        },
        range_0n,
        SummandFn([](auto& cx, const Binding& t, long k) {
            return cx.embed(neg1pow(k) * binomial_int(t.n, k) /
                            (t.b_val() + R(k)).pow(t.m_val()));
        }),
        ValueFn([](auto& cx, const Binding& t) ->
                typename std::decay_t<decltype(cx)>::value_type {
            using Ctx = std::decay_t<decltype(cx)>;
            if constexpr (std::is_same_v<Ctx, RatCtx>) {
                const R& b = t.b_val();
                if (!b.is_integer() || b.sign() <= 0)
                    throw UnsupportedError(
                        "peterson_m_family exact form needs positive integer b");
                return mth_power_sum_closed_form(t.n, b.to_long(), t.m_val());
            } else if constexpr (std::is_same_v<Ctx, IvalCtx>) {
                return mth_power_sum_enclosure(t.n, t.b_val(), t.m_val(),
                                               Precision::bits(cx.bits));
            } else {
                throw UnsupportedError("peterson_m_family: no ring backend");
            }
        }),
        {spec_of("binomial_frac_id", "m-fold derivative family")}, "Peterson; Bai-Luo"));

    return v;
}

}  // namespace hf
