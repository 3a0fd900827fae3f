#include "hf/registry.hpp"

#include <algorithm>

namespace hf {

std::string Binding::to_string() const {
    std::string s = "n=" + std::to_string(n);
    if (b) s += " b=" + b->to_string();
    if (c) s += " c=" + c->to_string();
    if (m) s += " m=" + std::to_string(*m);
    return s;
}

bool binding_less(const Binding& x, const Binding& y) {
    if (x.n != y.n) return x.n < y.n;
    auto cmp_opt = [](const std::optional<Rational>& a, const std::optional<Rational>& b) {
        if (a.has_value() != b.has_value()) return a.has_value() ? 1 : -1;
        if (!a) return 0;
        return *a < *b ? -1 : (*a == *b ? 0 : 1);
    };
    if (int c = cmp_opt(x.b, y.b)) return c < 0;
    if (int c = cmp_opt(x.c, y.c)) return c < 0;
    long xm = x.m.value_or(0), ym = y.m.value_or(0);
    return xm < ym;
}

std::string backend_name(Backend b) {
    switch (b) {
        case Backend::ExactRational: return "exact-rational";
        case Backend::ExactRing: return "exact-constring";
        case Backend::Interval: return "interval";
    }
    return "?";
}

std::string relation_kind_name(RelationKind k) {
    switch (k) {
        case RelationKind::BinomialTransformOf: return "binomial-transform-of";
        case RelationKind::InverseTransformOf: return "inverse-transform-of";
        case RelationKind::DerivativeInBOf: return "derivative-in-b-of";
        case RelationKind::DerivativeInCOf: return "derivative-in-c-of";
        case RelationKind::Specializes: return "specializes";
        case RelationKind::Rediscovers: return "rediscovers";
    }
    return "?";
}

std::string ParamSig::to_string() const {
    std::string s = "n";
    if (uses_b) s += ",b";
    if (uses_c) s += ",c";
    if (uses_m) s += ",m";
    return s;
}

Registry::Registry() : identities_(build_catalog()) {
    index_.reserve(identities_.size());
    for (size_t i = 0; i < identities_.size(); ++i)
        index_.emplace_back(identities_[i].id, i);
    std::sort(index_.begin(), index_.end());
    for (size_t i = 1; i < index_.size(); ++i)
        if (index_[i - 1].first == index_[i].first)
            throw Error("registry: duplicate id " + index_[i].first);

    // Close transform pairs symmetrically: the partner of a declared
    // transform points back with the inverse kind.
    for (auto& d : identities_) {
        for (const auto& rel : d.relations) {
            if (rel.kind != RelationKind::BinomialTransformOf &&
                rel.kind != RelationKind::InverseTransformOf)
                continue;
            auto it = std::lower_bound(index_.begin(), index_.end(),
                                       std::make_pair(rel.target, size_t(0)));
            if (it == index_.end() || it->first != rel.target)
                throw Error("registry: relation target missing: " + rel.target);
            auto& back = identities_[it->second];
            RelationKind inv = rel.kind == RelationKind::BinomialTransformOf
                                   ? RelationKind::InverseTransformOf
                                   : RelationKind::BinomialTransformOf;
            bool present = std::any_of(back.relations.begin(), back.relations.end(),
                                       [&](const Relation& r) {
                                           return r.kind == inv && r.target == d.id;
                                       });
            if (!present) back.relations.push_back({inv, d.id, "closure", {}, {}});
        }
    }
    // Every relation target must exist.
    for (const auto& d : identities_)
        for (const auto& rel : d.relations)
            if (!contains(rel.target))
                throw Error("registry: relation target missing: " + rel.target);
}

const Registry& Registry::instance() {
    static Registry r;
    return r;
}

bool Registry::contains(const std::string& id) const {
    auto it = std::lower_bound(index_.begin(), index_.end(), std::make_pair(id, size_t(0)));
    return it != index_.end() && it->first == id;
}

const IdentityDescriptor& Registry::get(const std::string& id) const {
    auto it = std::lower_bound(index_.begin(), index_.end(), std::make_pair(id, size_t(0)));
    if (it == index_.end() || it->first != id)
        throw UnknownIdentityError("unknown identity '" + id + "'");
    return identities_[it->second];
}

std::vector<std::string> Registry::resolve(const std::string& selector) const {
    std::vector<std::string> out;
    if (selector == "all") {
        for (const auto& d : identities_) out.push_back(d.id);
        return out;
    }
    if (contains(selector)) return {selector};
    for (const auto& d : identities_)
        if (d.id.rfind(selector, 0) == 0) out.push_back(d.id);
    return out;
}

}  // namespace hf
