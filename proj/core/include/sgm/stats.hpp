// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sgm/ensemble.hpp"
#include "sgm/int128.hpp"
#include "sgm/moments.hpp"
#include "sgm/motif.hpp"
#include "sgm/rational.hpp"

namespace sgm {

// ---- estimators ----------------------------------------------------------

struct Summary {
    double mean = 0;
    double variance = 0;     // unbiased
    double stderr_mean = 0;  // sd / sqrt(count)
};

// Compensated (Neumaier) summation; throws DomainError for fewer than two
// values.
Summary summarize(std::span<const double> values);

// Exact integer folds over replica counts. Sums are 128-bit, so counts up
// to ~2^31 over ~2^24 replicas stay exact; population moments are
// available as exact rationals for micro-ensemble comparisons.
struct ExactMoments {
    std::int64_t count = 0;
    int128 sum = 0;
    int128 sum_squares = 0;

    static ExactMoments from_values(std::span<const std::int64_t> values);

    Rational mean_rational() const;
    Rational population_variance_rational() const;
    double mean() const;
    double unbiased_variance() const;   // count >= 2
    double stderr_mean() const;
};

int128 cross_sum(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
Rational population_covariance_rational(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
double unbiased_covariance(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

// ---- replica records -----------------------------------------------------

struct ReplicaRecord {
    std::int64_t replica_index = 0;
    std::vector<std::int64_t> motif_counts;
    std::int64_t edge_count = 0;
};

struct ResidualVarianceEstimate {
    double value = 0;
    // True when Var(T_E) vanished (hard edge-count ensembles); value is
    // then the plain variance.
    bool degenerate = false;
};

// Sample Var(T_H) - Cov(T_H, T_E)^2 / Var(T_E) over the records; requires
// at least three records.
ResidualVarianceEstimate empirical_residual_variance(std::span<const ReplicaRecord> records,
                                                     std::size_t motif_index = 0);
ResidualVarianceEstimate empirical_residual_variance(std::span<const std::int64_t> motif_counts,
                                                     std::span<const std::int64_t> edge_counts);

// ---- Monte Carlo driver ---------------------------------------------------

// Raw counts for one ensemble instance: counts[m][r] is motif m's count in
// replica r, edge_counts[r] the edge total. Replica r always uses
// SeedStream{master_seed, r}, so results are independent of the thread
// count and bit-reproducible.
struct ReplicaSet {
    std::int64_t replicas = 0;
    std::vector<std::vector<std::int64_t>> counts;
    std::vector<std::int64_t> edge_counts;

    std::vector<ReplicaRecord> records() const;
};

ReplicaSet run_replicas(const EnsembleSpec& spec, std::span<const Motif> motifs,
                        std::int64_t replicas, std::uint64_t master_seed, int threads = 0);

// ---- convergence statistics ------------------------------------------------

// Scaled statistics whose limits isolate the volume and surface terms of
// the expected count: scaled_mean -> p^l/|S_H| and surface_statistic
// tracks the n^{v-1} coefficient.
struct ConvergenceRow {
    int n = 0;
    std::int64_t E = -1;  // dependent model only
    double scaled_mean = 0;
    double surface_statistic = 0;
    double scaled_std = 0;
    double stderr_mean = 0;
    double stderr_scaled_mean = 0;
    double stderr_surface = 0;
};

std::vector<ConvergenceRow> convergence_table(const Motif& m, ModelKind model, const Rational& p,
                                              std::span<const int> n_grid, std::int64_t replicas,
                                              std::uint64_t master_seed, int threads = 0);

// ---- diagnostics -----------------------------------------------------------

struct GrowthFit {
    double exponent = 0;
    double half_width = 0;  // standard error of the fitted slope
};

// Least-squares slope of log(statistic) against log(n); needs at least
// four points and positive statistics.
GrowthFit growth_exponent_fit(std::span<const std::pair<double, double>> points);

struct VarianceInterval {
    double lo = 0;
    double hi = 0;
};

// Percentile bootstrap interval for the unbiased variance of the values.
VarianceInterval bootstrap_variance_interval(std::span<const std::int64_t> values, int resamples,
                                             double level, std::uint64_t seed);

double lag1_autocorrelation(std::span<const std::int64_t> values);

double chi_square_statistic(std::span<const std::int64_t> observed, std::span<const double> expected);
// Wilson-Hilferty approximation of the chi-square quantile at normal
// deviate z (e.g. z = 3.719 for the 1 - 1e-4 quantile).
double chi_square_quantile(int degrees_of_freedom, double z);

}  // namespace sgm
