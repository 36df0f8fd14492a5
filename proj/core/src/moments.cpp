// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0

#include "sgm/moments.hpp"

#include <string>

#include "sgm/errors.hpp"
#include "sgm/pair_index.hpp"

namespace sgm {

namespace {

void check_probability(const Rational& p) {
    if (p.sign() < 0 || p > Rational(1)) throw DomainError("edge probability must lie in [0, 1]");
}

void check_edge_count(long n, std::int64_t E) {
    if (E < 0 || E > pair_count(n))
        throw DomainError("edge count " + std::to_string(E) + " out of range for n=" + std::to_string(n));
}

}  // namespace

Rational falling_prob(std::int64_t E, std::int64_t N, std::int64_t k) {
    if (N < 0 || E < 0 || E > N) throw DomainError("falling_prob: need 0 <= E <= N");
    if (k < 0 || k > N) throw DomainError("falling_prob: need 0 <= k <= N");
    if (k == 0) return Rational(1);
    if (k > E) return Rational(0);
    BigInt num = BigInt::falling_factorial(BigInt(E), static_cast<unsigned long>(k));
    BigInt den = BigInt::falling_factorial(BigInt(N), static_cast<unsigned long>(k));
    return Rational(num, den);
}

Rational mean_dependent(const Motif& m, long n, std::int64_t E) {
    check_edge_count(n, E);
    return Rational(copies_in_complete(m, n)) * falling_prob(E, pair_count(n), m.edge_count());
}

Rational variance_dependent_exact(const Motif& m, long n, std::int64_t E, std::int64_t work_budget) {
    check_edge_count(n, E);
    if (n < m.vertex_count()) return Rational(0);
    const std::int64_t N = pair_count(n);
    const int l = m.edge_count();
    auto table = overlap_table(m, n, work_budget);

    // <T^2> = sum_k C_k P(E, N, 2l - k); C_k vanishes whenever a shared
    // configuration needs more than N pairs, so skipping zero bins keeps
    // every falling_prob call in domain.
    Rational second_moment(0);
    for (int k = 0; k <= l; ++k) {
        const BigInt& ck = table.counts[static_cast<size_t>(k)];
        if (ck.is_zero()) continue;
        second_moment += Rational(ck) * falling_prob(E, N, 2 * l - k);
    }
    Rational mean = Rational(copies_in_complete(m, n)) * falling_prob(E, N, l);
    Rational var = second_moment - mean * mean;
    if (var.sign() < 0) throw VerificationFailed("variance_dependent_exact: negative variance");
    return var;
}

Polynomial variance_dependent_asymptotic(const Motif& m, const Rational& p, std::int64_t work_budget) {
    check_probability(p);
    const long l = m.edge_count();
    Polynomial result;
    if (l < 2) return result;
    auto polys = overlap_polynomials(m, work_budget);
    Rational w2 = Rational::pow(p, 2 * l - 2) * Rational::pow(Rational(1) - p, 2);
    result += w2 * polys[2].poly;
    if (l >= 3) {
        Rational w3 = Rational::pow(p, 2 * l - 3) *
                      (Rational(1) - Rational(3) * p * p + Rational(2) * Rational::pow(p, 3));
        result += w3 * polys[3].poly;
    }
    return result;
}

Rational mean_indep(const Motif& m, long n, const Rational& p) {
    check_probability(p);
    return Rational(copies_in_complete(m, n)) * Rational::pow(p, m.edge_count());
}

Rational variance_indep_exact(const Motif& m, long n, const Rational& p, std::int64_t work_budget) {
    check_probability(p);
    if (n < m.vertex_count()) return Rational(0);
    const long l = m.edge_count();
    auto table = overlap_table(m, n, work_budget);
    Rational p2l = Rational::pow(p, 2 * l);
    Rational var(0);
    for (long k = 1; k <= l; ++k) {
        const BigInt& ck = table.counts[static_cast<size_t>(k)];
        if (ck.is_zero()) continue;
        var += Rational(ck) * (Rational::pow(p, 2 * l - k) - p2l);
    }
    return var;
}

Rational covariance_with_edges_indep(const Motif& m, long n, const Rational& p) {
    check_probability(p);
    return Rational(copies_in_complete(m, n)) * Rational(static_cast<long>(m.edge_count())) *
           Rational::pow(p, m.edge_count()) * (Rational(1) - p);
}

Rational residual_variance_indep(const Motif& m, long n, const Rational& p, std::int64_t work_budget) {
    if (p.sign() <= 0 || p >= Rational(1))
        throw DomainError("residual_variance_indep: requires 0 < p < 1");
    Rational var = variance_indep_exact(m, n, p, work_budget);
    if (n < m.vertex_count()) return var;  // zero
    Rational cov = covariance_with_edges_indep(m, n, p);
    Rational var_edges = Rational(BigInt(pair_count(n))) * p * (Rational(1) - p);
    return var - cov * cov / var_edges;
}

Rational residual_variance_indep_series(const Motif& m, long n, const Rational& p,
                                        std::int64_t work_budget) {
    if (p.sign() <= 0 || p >= Rational(1))
        throw DomainError("residual_variance_indep_series: requires 0 < p < 1");
    if (n < m.vertex_count()) return Rational(0);
    const long l = m.edge_count();
    auto table = overlap_table(m, n, work_budget);
    Rational p2l = Rational::pow(p, 2 * l);
    Rational edge_term = Rational::pow(p, 2 * l - 1) - p2l;
    Rational acc(0);
    for (long k = 0; k <= l; ++k) {
        const BigInt& ck = table.counts[static_cast<size_t>(k)];
        if (ck.is_zero()) continue;
        acc += Rational(ck) *
               (Rational::pow(p, 2 * l - k) - p2l - Rational(k) * edge_term);
    }
    return acc;
}

MomentReport moment_report_dependent(const Motif& m, long n, std::int64_t E, std::int64_t work_budget) {
    check_edge_count(n, E);
    const std::int64_t N = pair_count(n);
    MomentReport r{m,
                   ModelKind::dependent,
                   n,
                   E,
                   N > 0 ? Rational(BigInt(E), BigInt(N)) : Rational(0),
                   mean_dependent(m, n, E),
                   variance_dependent_exact(m, n, E, work_budget),
                   std::nullopt,
                   std::nullopt};
    return r;
}

MomentReport moment_report_independent(const Motif& m, long n, const Rational& p, std::int64_t work_budget) {
    check_probability(p);
    MomentReport r{m,
                   ModelKind::independent,
                   n,
                   -1,
                   p,
                   mean_indep(m, n, p),
                   variance_indep_exact(m, n, p, work_budget),
                   covariance_with_edges_indep(m, n, p),
                   std::nullopt};
    if (p.sign() > 0 && p < Rational(1)) r.residual_variance = residual_variance_indep(m, n, p, work_budget);
    return r;
}

AsymptoticExpansion asymptotic_report(const Motif& m, const Rational& p, ModelKind model,
                                      SizeParameter size_parameter) {
    check_probability(p);
    const long v = m.vertex_count();
    const long l = m.edge_count();
    Rational base = Rational::pow(p, l) / Rational(BigInt(automorphism_order(m)));

    AsymptoticExpansion a{m, model, size_parameter, Rational(0), {}, Rational(0), {}, Rational(0), false};
    if (size_parameter == SizeParameter::vertices) {
        a.volume_exponent = Rational(v);
        a.volume_coefficient = {base, 0};
        a.surface_exponent = Rational(v - 1);
        a.surface_coefficient = {-Rational(v * (v - 1), 2) * base, 0};
        a.variance_growth_exponent = model == ModelKind::dependent ? Rational(2 * v - 3) : Rational(2 * v - 2);
    } else {
        // In powers of N = n(n-1)/2: n^v = 2^{v/2} N^{v/2} + ... and the
        // surface coefficient picks up a 2^{(v-3)/2} v(v-2) factor.
        a.volume_exponent = Rational(v, 2);
        a.volume_coefficient = {base, static_cast<int>(v)};
        a.surface_exponent = Rational(v - 1, 2);
        a.surface_coefficient = {-Rational(v * (v - 2)) * base, static_cast<int>(v - 3)};
        a.variance_growth_exponent =
            model == ModelKind::dependent ? Rational(2 * v - 3, 2) : Rational(v - 1);
    }
    a.surface_significant = a.variance_growth_exponent / Rational(2) < a.surface_exponent;
    return a;
}

}  // namespace sgm
