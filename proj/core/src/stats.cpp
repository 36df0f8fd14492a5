// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0

#include "sgm/stats.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <thread>

#include "sgm/counting.hpp"
#include "sgm/errors.hpp"

namespace sgm {

namespace {

double neumaier_sum(std::span<const double> values) {
    double sum = 0, comp = 0;
    for (double x : values) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    return sum + comp;
}

}  // namespace

Summary summarize(std::span<const double> values) {
    if (values.size() < 2) throw DomainError("summarize: need at least two values");
    const auto count = static_cast<double>(values.size());
    double mean = neumaier_sum(values) / count;
    std::vector<double> sq(values.size());
    for (size_t i = 0; i < values.size(); ++i) {
        double d = values[i] - mean;
        sq[i] = d * d;
    }
    double variance = neumaier_sum(sq) / (count - 1);
    return Summary{mean, variance, std::sqrt(variance / count)};
}

ExactMoments ExactMoments::from_values(std::span<const std::int64_t> values) {
    ExactMoments m;
    m.count = static_cast<std::int64_t>(values.size());
    for (auto v : values) {
        m.sum += v;
        m.sum_squares += static_cast<int128>(v) * v;
    }
    return m;
}

Rational ExactMoments::mean_rational() const {
    if (count == 0) throw DomainError("ExactMoments: empty");
    return Rational(bigint_from_i128(sum), BigInt(count));
}

Rational ExactMoments::population_variance_rational() const {
    if (count == 0) throw DomainError("ExactMoments: empty");
    BigInt c(count);
    BigInt num = c * bigint_from_i128(sum_squares) - bigint_from_i128(sum) * bigint_from_i128(sum);
    return Rational(num, c * c);
}

double ExactMoments::mean() const { return double_from_i128(sum) / static_cast<double>(count); }

double ExactMoments::unbiased_variance() const {
    if (count < 2) throw DomainError("ExactMoments: variance needs two values");
    // count * sum_sq - sum^2 is exact in 128 bits for our count ranges.
    int128 num = static_cast<int128>(count) * sum_squares - sum * sum;
    return double_from_i128(num) / (static_cast<double>(count) * static_cast<double>(count - 1));
}

double ExactMoments::stderr_mean() const {
    return std::sqrt(unbiased_variance() / static_cast<double>(count));
}

int128 cross_sum(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    if (a.size() != b.size()) throw DomainError("cross_sum: size mismatch");
    int128 acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc += static_cast<int128>(a[i]) * b[i];
    return acc;
}

Rational population_covariance_rational(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    if (a.empty() || a.size() != b.size()) throw DomainError("population_covariance: bad sizes");
    auto ma = ExactMoments::from_values(a);
    auto mb = ExactMoments::from_values(b);
    BigInt c(ma.count);
    BigInt num = c * bigint_from_i128(cross_sum(a, b)) - bigint_from_i128(ma.sum) * bigint_from_i128(mb.sum);
    return Rational(num, c * c);
}

double unbiased_covariance(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    if (a.size() < 2 || a.size() != b.size()) throw DomainError("unbiased_covariance: bad sizes");
    auto ma = ExactMoments::from_values(a);
    auto mb = ExactMoments::from_values(b);
    int128 num = static_cast<int128>(ma.count) * cross_sum(a, b) - ma.sum * mb.sum;
    return double_from_i128(num) / (static_cast<double>(ma.count) * static_cast<double>(ma.count - 1));
}

ResidualVarianceEstimate empirical_residual_variance(std::span<const std::int64_t> motif_counts,
                                                     std::span<const std::int64_t> edge_counts) {
    if (motif_counts.size() < 3) throw DomainError("empirical_residual_variance: need >= 3 records");
    auto mh = ExactMoments::from_values(motif_counts);
    auto me = ExactMoments::from_values(edge_counts);
    double var_h = mh.unbiased_variance();
    double var_e = me.unbiased_variance();
    if (var_e == 0.0) return {var_h, true};
    double cov = unbiased_covariance(motif_counts, edge_counts);
    return {var_h - cov * cov / var_e, false};
}

ResidualVarianceEstimate empirical_residual_variance(std::span<const ReplicaRecord> records,
                                                     std::size_t motif_index) {
    std::vector<std::int64_t> counts, edges;
    counts.reserve(records.size());
    edges.reserve(records.size());
    for (const auto& r : records) {
        if (motif_index >= r.motif_counts.size())
            throw DomainError("empirical_residual_variance: motif index out of range");
        counts.push_back(r.motif_counts[motif_index]);
        edges.push_back(r.edge_count);
    }
    return empirical_residual_variance(counts, edges);
}

std::vector<ReplicaRecord> ReplicaSet::records() const {
    std::vector<ReplicaRecord> out(static_cast<size_t>(replicas));
    for (std::int64_t r = 0; r < replicas; ++r) {
        auto& rec = out[static_cast<size_t>(r)];
        rec.replica_index = r;
        rec.edge_count = edge_counts[static_cast<size_t>(r)];
        rec.motif_counts.reserve(counts.size());
        for (const auto& per_motif : counts) rec.motif_counts.push_back(per_motif[static_cast<size_t>(r)]);
    }
    return out;
}

namespace {

// Per-block-pair edge tallies of a colored sample must reproduce the
// E_matrix exactly; checked on every block_dependent replica.
void check_block_counts(const EnsembleSpec& spec, const GraphSample& g) {
    const size_t B = spec.sizes.size();
    std::vector<std::vector<std::int64_t>> tally(B, std::vector<std::int64_t>(B, 0));
    for (auto [a, b] : g.edges) {
        int ca = g.colors[static_cast<size_t>(a)];
        int cb = g.colors[static_cast<size_t>(b)];
        ++tally[static_cast<size_t>(std::min(ca, cb))][static_cast<size_t>(std::max(ca, cb))];
    }
    for (size_t i = 0; i < B; ++i)
        for (size_t j = i; j < B; ++j)
            if (tally[i][j] != spec.E_matrix[i][j])
                throw VerificationFailed("block_dependent sample violated an edge-count constraint");
}

}  // namespace

ReplicaSet run_replicas(const EnsembleSpec& spec, std::span<const Motif> motifs,
                        std::int64_t replicas, std::uint64_t master_seed, int threads) {
    if (replicas < 1) throw DomainError("run_replicas: need at least one replica");
    spec.validate();

    const Motif triangle = make_builtin(BuiltinMotif::triangle);
    const Motif two_star = make_builtin(BuiltinMotif::two_star);
    const Motif single_edge = make_builtin(BuiltinMotif::edge);

    ReplicaSet out;
    out.replicas = replicas;
    out.counts.assign(motifs.size(), std::vector<std::int64_t>(static_cast<size_t>(replicas), 0));
    out.edge_counts.assign(static_cast<size_t>(replicas), 0);

    auto worker = [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t r = begin; r < end; ++r) {
            GraphSample g = sample(spec, SeedStream{master_seed, static_cast<std::uint64_t>(r)});
            if (spec.kind == EnsembleKind::dependent &&
                static_cast<std::int64_t>(g.edges.size()) != spec.E)
                throw VerificationFailed("dependent sample violated the edge-count constraint");
            if (spec.kind == EnsembleKind::block_dependent) check_block_counts(spec, g);
            out.edge_counts[static_cast<size_t>(r)] = static_cast<std::int64_t>(g.edges.size());
            HostGraph host(g);
            for (size_t mi = 0; mi < motifs.size(); ++mi) {
                const Motif& m = motifs[mi];
                BigInt value;
                if (m == triangle)
                    value = count_triangles(host);
                else if (m == two_star)
                    value = count_two_stars(host);
                else if (m == single_edge)
                    value = count_edges(g);
                else
                    value = count_motif(host, m);
                out.counts[mi][static_cast<size_t>(r)] = value.to_int64();
            }
        }
    };

    int hw = static_cast<int>(std::thread::hardware_concurrency());
    int k = threads > 0 ? threads : std::max(1, hw);
    k = static_cast<int>(std::min<std::int64_t>(k, replicas));
    if (k <= 1) {
        worker(0, replicas);
        return out;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(k));
    std::int64_t chunk = (replicas + k - 1) / k;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (int t = 0; t < k; ++t) {
        std::int64_t begin = t * chunk;
        std::int64_t end = std::min(replicas, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, begin, end] {
            try {
                worker(begin, end);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

std::vector<ConvergenceRow> convergence_table(const Motif& m, ModelKind model, const Rational& p,
                                              std::span<const int> n_grid, std::int64_t replicas,
                                              std::uint64_t master_seed, int threads) {
    if (replicas < 2) throw DomainError("convergence_table: need at least two replicas");
    const double limit = Rational::pow(p, m.edge_count()).to_double() /
                         static_cast<double>(automorphism_order(m));
    const int v = m.vertex_count();

    std::vector<ConvergenceRow> rows;
    rows.reserve(n_grid.size());
    const Motif motifs[] = {m};
    for (int n : n_grid) {
        EnsembleSpec spec;
        spec.n = n;
        if (model == ModelKind::dependent) {
            spec.kind = EnsembleKind::dependent;
            spec.E = edge_budget(n, p);
        } else {
            spec.kind = EnsembleKind::independent;
            spec.p = p;
        }
        auto set = run_replicas(spec, motifs, replicas, mix_seed(master_seed, static_cast<std::uint64_t>(n)),
                                threads);
        auto moments = ExactMoments::from_values(set.counts[0]);
        double sd = std::sqrt(moments.unbiased_variance());
        double stderr_mean = moments.stderr_mean();
        double nv = std::pow(static_cast<double>(n), v);
        ConvergenceRow row;
        row.n = n;
        row.E = model == ModelKind::dependent ? spec.E : -1;
        row.scaled_mean = moments.mean() / nv;
        row.surface_statistic = static_cast<double>(n) * (row.scaled_mean - limit);
        row.scaled_std = sd / std::pow(static_cast<double>(n), v - 1.5);
        row.stderr_mean = stderr_mean;
        row.stderr_scaled_mean = stderr_mean / nv;
        row.stderr_surface = stderr_mean * static_cast<double>(n) / nv;
        rows.push_back(row);
    }
    return rows;
}

GrowthFit growth_exponent_fit(std::span<const std::pair<double, double>> points) {
    if (points.size() < 4) throw DomainError("growth_exponent_fit: need at least four points");
    const auto count = static_cast<double>(points.size());
    double sx = 0, sy = 0;
    std::vector<double> xs(points.size()), ys(points.size());
    for (size_t i = 0; i < points.size(); ++i) {
        if (points[i].first <= 0 || points[i].second <= 0)
            throw DomainError("growth_exponent_fit: nonpositive point");
        xs[i] = std::log(points[i].first);
        ys[i] = std::log(points[i].second);
        sx += xs[i];
        sy += ys[i];
    }
    double mx = sx / count, my = sy / count;
    double sxx = 0, sxy = 0;
    for (size_t i = 0; i < points.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0) throw DomainError("growth_exponent_fit: degenerate grid");
    double slope = sxy / sxx;
    double rss = 0;
    for (size_t i = 0; i < points.size(); ++i) {
        double resid = ys[i] - my - slope * (xs[i] - mx);
        rss += resid * resid;
    }
    double se = std::sqrt(rss / (count - 2) / sxx);
    return GrowthFit{slope, se};
}

VarianceInterval bootstrap_variance_interval(std::span<const std::int64_t> values, int resamples,
                                             double level, std::uint64_t seed) {
    if (values.size() < 2) throw DomainError("bootstrap_variance_interval: need at least two values");
    if (resamples < 10) throw DomainError("bootstrap_variance_interval: too few resamples");
    if (level <= 0 || level >= 1) throw DomainError("bootstrap_variance_interval: level in (0,1)");
    Xoshiro256pp rng(mix_seed(seed, 0x626f6f74));  // "boot"
    const auto R = static_cast<std::uint64_t>(values.size());
    std::vector<double> stats(static_cast<size_t>(resamples));
    for (int b = 0; b < resamples; ++b) {
        int128 sum = 0, sum_sq = 0;
        for (std::uint64_t i = 0; i < R; ++i) {
            std::int64_t x = values[static_cast<size_t>(rng.next_below(R))];
            sum += x;
            sum_sq += static_cast<int128>(x) * x;
        }
        int128 num = static_cast<int128>(R) * sum_sq - sum * sum;
        stats[static_cast<size_t>(b)] =
            double_from_i128(num) / (static_cast<double>(R) * static_cast<double>(R - 1));
    }
    std::sort(stats.begin(), stats.end());
    double tail = (1.0 - level) / 2.0;
    auto lo_idx = static_cast<size_t>(std::floor(tail * resamples));
    auto hi_idx = static_cast<size_t>(std::ceil((1.0 - tail) * resamples)) - 1;
    hi_idx = std::min(hi_idx, stats.size() - 1);
    return VarianceInterval{stats[lo_idx], stats[hi_idx]};
}

double lag1_autocorrelation(std::span<const std::int64_t> values) {
    if (values.size() < 3) throw DomainError("lag1_autocorrelation: need at least three values");
    auto m = ExactMoments::from_values(values);
    double mean = m.mean();
    double num = 0, den = 0;
    for (size_t i = 0; i < values.size(); ++i) {
        double d = static_cast<double>(values[i]) - mean;
        den += d * d;
        if (i + 1 < values.size()) num += d * (static_cast<double>(values[i + 1]) - mean);
    }
    if (den == 0) return 0;
    return num / den;
}

double chi_square_statistic(std::span<const std::int64_t> observed, std::span<const double> expected) {
    if (observed.size() != expected.size() || observed.empty())
        throw DomainError("chi_square_statistic: size mismatch");
    double stat = 0;
    for (size_t i = 0; i < observed.size(); ++i) {
        if (expected[i] <= 0) throw DomainError("chi_square_statistic: nonpositive expectation");
        double d = static_cast<double>(observed[i]) - expected[i];
        stat += d * d / expected[i];
    }
    return stat;
}

double chi_square_quantile(int degrees_of_freedom, double z) {
    if (degrees_of_freedom < 1) throw DomainError("chi_square_quantile: df >= 1");
    double df = degrees_of_freedom;
    double a = 2.0 / (9.0 * df);
    double t = 1.0 - a + z * std::sqrt(a);
    return df * t * t * t;
}

}  // namespace sgm
