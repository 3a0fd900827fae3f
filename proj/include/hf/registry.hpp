#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hf/eval_context.hpp"

namespace hf {

enum class Backend : unsigned {
    ExactRational = 1u,
    ExactRing = 2u,
    Interval = 4u,
};
using BackendSet = unsigned;

inline bool has_backend(BackendSet s, Backend b) {
    return (s & static_cast<unsigned>(b)) != 0;
}
std::string backend_name(Backend b);

enum class RelationKind {
    BinomialTransformOf,
    InverseTransformOf,
    DerivativeInBOf,
    DerivativeInCOf,
    Specializes,
    Rediscovers,
};
std::string relation_kind_name(RelationKind k);

// Payload for derivative relations: at an interior binding,
//   d/dparam(base side) = lambda * (derived side) + mu(binding) * (base side),
// checked by interval central differences.
struct DerivCheck {
    Rational lambda_factor;
    std::optional<ValueFn> mu;
};

// Payload for transform relations: with seq_a(k) = rhs of the target identity
// at k (patched by brute-force summation below the target's n-floor),
//   T(seq_a)(n) = phi(binding_n) * rhs_self(binding_n) + rho(binding_n),
// where T is the signed binomial transform sum_k (-1)^k C(n,k) a_k.
struct TransformCheck {
    ValueFn phi;
    std::optional<ValueFn> rho;
};

struct Relation {
    RelationKind kind;
    std::string target;
    std::string note;
    std::optional<DerivCheck> deriv;
    std::optional<TransformCheck> transform;
};

struct ParamSig {
    bool uses_b = false;
    bool uses_c = false;
    bool uses_m = false;
    std::string to_string() const;
};

struct IdentityDescriptor {
    std::string id;
    std::string statement;  // ASCII rendering of the identity
    std::string source;     // literature attribution where one exists
    ParamSig params;
    BackendSet backends = 0;
    std::function<bool(const Binding&)> domain;
    std::function<std::pair<long, long>(const Binding&)> lhs_range;
    SummandFn lhs_summand;
    ValueFn rhs;
    std::vector<Relation> relations;
};

class Registry {
public:
    static const Registry& instance();

    const std::vector<IdentityDescriptor>& list() const { return identities_; }
    const IdentityDescriptor& get(const std::string& id) const;
    bool contains(const std::string& id) const;
    // ids matching an exact id or an id prefix
    std::vector<std::string> resolve(const std::string& selector) const;

private:
    Registry();
    std::vector<IdentityDescriptor> identities_;
    std::vector<std::pair<std::string, size_t>> index_;  // sorted by id
};

inline const std::vector<IdentityDescriptor>& list_identities() {
    return Registry::instance().list();
}
inline const IdentityDescriptor& get_identity(const std::string& id) {
    return Registry::instance().get(id);
}

// LHS by direct summation of the summand over the declared range: this is the
// brute-force oracle every closed form is checked against.
template <class Ctx>
typename Ctx::value_type evaluate_lhs(const IdentityDescriptor& d, Ctx& ctx, const Binding& t) {
    auto [k0, k1] = d.lhs_range(t);
    typename Ctx::value_type acc = ctx.embed(Rational(0));
    for (long k = k0; k <= k1; ++k) acc = acc + call_summand(d.lhs_summand, ctx, t, k);
    return acc;
}

template <class Ctx>
typename Ctx::value_type evaluate_rhs(const IdentityDescriptor& d, Ctx& ctx, const Binding& t) {
    return call_value(d.rhs, ctx, t);
}

// Populates the registry; defined in catalog.cpp.
std::vector<IdentityDescriptor> build_catalog();

}  // namespace hf
