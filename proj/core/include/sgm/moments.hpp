// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

#include "sgm/census.hpp"
#include "sgm/motif.hpp"
#include "sgm/polynomial.hpp"
#include "sgm/rational.hpp"

namespace sgm {

// The two random-graph models: a hard edge-count constraint (uniform over
// graphs with exactly E edges) versus independent edges with probability p.
enum class ModelKind { dependent, independent };

// Probability that k specified pairs are all edges under the hard
// edge-count model: E(E-1)...(E+1-k) / (N(N-1)...(N+1-k)). Exact; 1 for
// k == 0, 0 for k > E. Throws DomainError unless 0 <= E <= N and
// 0 <= k <= N.
Rational falling_prob(std::int64_t E, std::int64_t N, std::int64_t k);

// Exact mean of the motif count over graphs on n vertices with exactly E
// edges: copies_in_complete * falling_prob(E, N, edge_count).
Rational mean_dependent(const Motif& m, long n, std::int64_t E);

// Exact variance in the hard edge-count model, from the overlap table.
Rational variance_dependent_exact(const Motif& m, long n, std::int64_t E,
                                  std::int64_t work_budget = kDefaultCensusBudget);

// Leading asymptotic variance in the hard edge-count model as a polynomial
// in n: C2(n) p^{2l-2}(1-p)^2 + C3(n) p^{2l-3}(1-3p^2+2p^3), exact up to
// O(n^{2v-4}).
Polynomial variance_dependent_asymptotic(const Motif& m, const Rational& p,
                                         std::int64_t work_budget = kDefaultCensusBudget);

// Independent-edge model: exact mean c_n p^l.
Rational mean_indep(const Motif& m, long n, const Rational& p);

// Independent-edge model: exact variance sum_k C_k (p^{2l-k} - p^{2l}).
Rational variance_indep_exact(const Motif& m, long n, const Rational& p,
                              std::int64_t work_budget = kDefaultCensusBudget);

// Exact covariance of the motif count with the edge count:
// c_n * l * p^l (1-p).
Rational covariance_with_edges_indep(const Motif& m, long n, const Rational& p);

// Variance left after linearly explaining the motif count by the edge
// count: Var - Cov^2 / (N p(1-p)). Requires 0 < p < 1.
Rational residual_variance_indep(const Motif& m, long n, const Rational& p,
                                 std::int64_t work_budget = kDefaultCensusBudget);

// Same quantity evaluated through the overlap-table series
// sum_k C_k (p^{2l-k} - p^{2l} - k(p^{2l-1} - p^{2l})); used as the second
// exact route in cross-checks.
Rational residual_variance_indep_series(const Motif& m, long n, const Rational& p,
                                        std::int64_t work_budget = kDefaultCensusBudget);

// Exact moments for one (motif, model, n) triple; covariance and residual
// variance only apply to the independent model.
struct MomentReport {
    Motif motif;
    ModelKind model;
    long n;
    std::int64_t E;  // dependent only; -1 otherwise
    Rational p;      // independent: the edge probability; dependent: E/N
    Rational mean;
    Rational variance;
    std::optional<Rational> covariance_with_edges;
    std::optional<Rational> residual_variance;
};

MomentReport moment_report_dependent(const Motif& m, long n, std::int64_t E,
                                     std::int64_t work_budget = kDefaultCensusBudget);
MomentReport moment_report_independent(const Motif& m, long n, const Rational& p,
                                       std::int64_t work_budget = kDefaultCensusBudget);

enum class SizeParameter { vertices, pairs };  // measure size by n or by N = n(n-1)/2

// Exact rational multiplied by an integer power of sqrt(2); the
// pair-count expansion has half-integer powers of 2 in its coefficients.
struct SqrtCoefficient {
    Rational factor;
    int sqrt2_exponent = 0;
    double value() const { return factor.to_double() * std::pow(2.0, 0.5 * sqrt2_exponent); }
};

// Leading (volume) and subleading (surface) terms of the expected motif
// count, plus the variance growth rate, in the chosen size parameter.
// The surface term is statistically meaningful when the standard
// deviation grows strictly slower than it.
struct AsymptoticExpansion {
    Motif motif;
    ModelKind model;
    SizeParameter size_parameter;
    Rational volume_exponent;
    SqrtCoefficient volume_coefficient;
    Rational surface_exponent;
    SqrtCoefficient surface_coefficient;
    Rational variance_growth_exponent;
    bool surface_significant;
};

AsymptoticExpansion asymptotic_report(const Motif& m, const Rational& p, ModelKind model,
                                      SizeParameter size_parameter);

}  // namespace sgm
