#pragma once

#include <span>
#include <string>
#include <vector>

#include "hf/registry.hpp"

namespace hf {

enum class Status { Pass, Fail, SkippedPole, Unsupported, Inconclusive };
std::string status_name(Status s);

struct InstanceResult {
    Binding binding;
    Status status = Status::Pass;
    std::string lhs_text;
    std::string rhs_text;
    std::optional<Rational> lhs_width;
    std::optional<Rational> rhs_width;
    std::string note;
};

struct VerificationReport {
    std::string id;
    std::string backend;
    std::vector<InstanceResult> instances;
    double wall_ms = 0.0;

    long count(Status s) const;
    long passed() const { return count(Status::Pass); }
    long failed() const { return count(Status::Fail); }
    // No failures and nothing inconclusive; skips and unsupported do not fail.
    bool ok() const { return failed() == 0 && count(Status::Inconclusive) == 0; }
    std::string summary() const;
};

struct GridSpec {
    long n_min = 0;
    long n_max = 10;
    std::vector<Rational> b_values;
    std::vector<Rational> c_values;
    std::vector<long> m_values;
};

// Grid points in canonical (n, b, c, m) order; bindings outside the
// descriptor's domain are kept so reports can show them as skipped.
std::vector<Binding> enumerate_bindings(const IdentityDescriptor& d, const GridSpec& grid);

enum class ExactMode { Auto, ForceRational, ForceRing };

// Direct summation vs closed form in an exact backend, zero tolerance.
VerificationReport verify_exact(const std::string& id, const GridSpec& grid,
                                ExactMode mode = ExactMode::Auto);

// Enclosure comparison: pass when both side enclosures reach the target width
// and overlap; disjoint enclosures are a certified counterexample.
VerificationReport verify_interval(const std::string& id, std::span<const Binding> bindings,
                                   const Precision& prec);
VerificationReport verify_interval(const std::string& id, const Binding& binding,
                                   const Precision& prec);

// b_n = sum_{k=0..n} (-1)^k C(n,k) a_k; self-inverse.
template <class V>
V binomial_transform(std::span<const V> a, long n) {
    if (n < 0 || n + 1 > static_cast<long>(a.size()))
        throw DomainError("binomial_transform: sequence too short");
    V acc = a[0];
    for (long k = 1; k <= n; ++k)
        acc = acc + a[static_cast<size_t>(k)] * (neg1pow(k) * binomial_int(n, k));
    return acc;
}
Rational binomial_transform(const std::vector<Rational>& a, long n);

// Exact check of a declared transform relation between two identities, plus
// the double-transform involution on the underlying sequence.
VerificationReport transform_crosscheck(const std::string& id_a, const std::string& id_b,
                                        const GridSpec& grid);

// Central-difference check of a declared derivative relation: the error
// against the derived identity must shrink at observed order ~2 (ratio in
// [3.5, 4.5] as h halves) and the final error must be below tolerance.
VerificationReport derivative_consistency(const std::string& base_id,
                                          const std::string& derived_id, const Binding& at,
                                          const std::vector<Rational>& h_values,
                                          const Precision& prec);

// sum_{k=0..n} (-1)^k C(n,k)/(b+k)^m without direct summation: Leibniz
// recurrence on f(b) = 1/(b C(n+b,b)) with
// u^(i)(b) = psi^(i)(b) - psi^(i)(n+b+1) = (-1)^{i-1} i! (H^(i+1)_{n+b} - H^(i+1)_{b-1}),
// scaled by (-1)^{m-1}/(m-1)!.
Rational mth_power_sum_closed_form(long n, long b, long m);
// Same derivative route for rational b through polygamma enclosures.
Interval mth_power_sum_enclosure(long n, const Rational& b, long m, const Precision& prec);

// min(HF_WORKERS, hardware threads), at least 1
unsigned worker_count();

}  // namespace hf
