// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0

#include "sgm/ensemble.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>
#include <unordered_map>

#include "sgm/errors.hpp"
#include "sgm/pair_index.hpp"

namespace sgm {

namespace {

// E distinct indices from [0, N), uniform over E-subsets. Partial
// Fisher-Yates over a sparse displacement map, O(E) time and memory; for
// dense draws the complement is sampled instead.
std::vector<std::int64_t> sample_indices(std::int64_t N, std::int64_t E, Xoshiro256pp& rng) {
    if (E < 0 || E > N) throw DomainError("sample_indices: need 0 <= E <= N");
    if (2 * E > N) {
        auto excluded = sample_indices(N, N - E, rng);
        std::vector<bool> keep(static_cast<size_t>(N), true);
        for (auto idx : excluded) keep[static_cast<size_t>(idx)] = false;
        std::vector<std::int64_t> out;
        out.reserve(static_cast<size_t>(E));
        for (std::int64_t i = 0; i < N; ++i)
            if (keep[static_cast<size_t>(i)]) out.push_back(i);
        return out;
    }
    std::vector<std::int64_t> out;
    out.reserve(static_cast<size_t>(E));
    // Same draw sequence either way; the flat array is cheaper whenever
    // initializing it is comparable to the draw count.
    if (N <= 65536 || N <= 8 * E) {
        std::vector<std::int64_t> pool(static_cast<size_t>(N));
        std::iota(pool.begin(), pool.end(), std::int64_t{0});
        for (std::int64_t t = 0; t < E; ++t) {
            std::int64_t r = t + static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(N - t)));
            out.push_back(pool[static_cast<size_t>(r)]);
            pool[static_cast<size_t>(r)] = pool[static_cast<size_t>(t)];
        }
        return out;
    }
    std::unordered_map<std::int64_t, std::int64_t> displaced;
    displaced.reserve(static_cast<size_t>(E) * 2);
    auto value_at = [&](std::int64_t x) {
        auto it = displaced.find(x);
        return it == displaced.end() ? x : it->second;
    };
    for (std::int64_t t = 0; t < E; ++t) {
        std::int64_t r = t + static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(N - t)));
        std::int64_t vr = value_at(r);
        std::int64_t vt = value_at(t);
        out.push_back(vr);
        displaced[r] = vt;
    }
    return out;
}

void sort_edges(GraphSample& g) { std::sort(g.edges.begin(), g.edges.end()); }

}  // namespace

void EnsembleSpec::validate() const {
    switch (kind) {
        case EnsembleKind::dependent:
            if (n < 1) throw DomainError("EnsembleSpec: n must be positive");
            if (E < 0 || E > pair_count(n)) throw DomainError("EnsembleSpec: E out of range");
            return;
        case EnsembleKind::independent:
            if (n < 1) throw DomainError("EnsembleSpec: n must be positive");
            if (p.sign() < 0 || p > Rational(1)) throw DomainError("EnsembleSpec: p out of [0, 1]");
            return;
        case EnsembleKind::block_dependent:
        case EnsembleKind::block_independent:
            break;
    }
    const size_t B = sizes.size();
    if (B == 0) throw DomainError("EnsembleSpec: block model needs sizes");
    for (int s : sizes)
        if (s < 1) throw DomainError("EnsembleSpec: block sizes must be positive");
    if (kind == EnsembleKind::block_dependent) {
        if (E_matrix.size() != B) throw DomainError("EnsembleSpec: E_matrix dimension mismatch");
        for (size_t i = 0; i < B; ++i) {
            if (E_matrix[i].size() != B) throw DomainError("EnsembleSpec: E_matrix dimension mismatch");
            for (size_t j = 0; j < B; ++j) {
                if (E_matrix[i][j] != E_matrix[j][i]) throw DomainError("EnsembleSpec: E_matrix not symmetric");
                std::int64_t cap = i == j ? pair_count(sizes[i])
                                          : static_cast<std::int64_t>(sizes[i]) * sizes[j];
                if (E_matrix[i][j] < 0 || E_matrix[i][j] > cap)
                    throw DomainError("EnsembleSpec: E_matrix entry out of range");
            }
        }
    } else {
        if (p_matrix.size() != B) throw DomainError("EnsembleSpec: p_matrix dimension mismatch");
        for (size_t i = 0; i < B; ++i) {
            if (p_matrix[i].size() != B) throw DomainError("EnsembleSpec: p_matrix dimension mismatch");
            for (size_t j = 0; j < B; ++j) {
                if (p_matrix[i][j] != p_matrix[j][i]) throw DomainError("EnsembleSpec: p_matrix not symmetric");
                if (p_matrix[i][j].sign() < 0 || p_matrix[i][j] > Rational(1))
                    throw DomainError("EnsembleSpec: p_matrix entry out of [0, 1]");
            }
        }
    }
}

int EnsembleSpec::total_vertices() const {
    if (kind == EnsembleKind::block_dependent || kind == EnsembleKind::block_independent) {
        int total = 0;
        for (int s : sizes) total += s;
        return total;
    }
    return n;
}

GraphSample sample_dependent(int n, std::int64_t E, const SeedStream& stream) {
    if (n < 1) throw DomainError("sample_dependent: n must be positive");
    const std::int64_t N = pair_count(n);
    if (E < 0 || E > N) throw DomainError("sample_dependent: E out of range");
    auto rng = stream.make_rng();
    GraphSample g{n, {}, {}};
    g.edges.reserve(static_cast<size_t>(E));
    for (auto idx : sample_indices(N, E, rng)) {
        auto [i, j] = pair_from_index(idx);
        g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
    sort_edges(g);
    return g;
}

GraphSample sample_independent(int n, const Rational& p, const SeedStream& stream) {
    if (n < 1) throw DomainError("sample_independent: n must be positive");
    if (p.sign() < 0 || p > Rational(1)) throw DomainError("sample_independent: p out of [0, 1]");
    auto rng = stream.make_rng();
    const double threshold = p.to_double();
    GraphSample g{n, {}, {}};
    const std::int64_t N = pair_count(n);
    for (std::int64_t idx = 0; idx < N; ++idx) {
        if (rng.next_bernoulli(threshold)) {
            auto [i, j] = pair_from_index(idx);
            g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    sort_edges(g);
    return g;
}

GraphSample sample_block(const EnsembleSpec& spec, const SeedStream& stream) {
    if (spec.kind != EnsembleKind::block_dependent && spec.kind != EnsembleKind::block_independent)
        throw DomainError("sample_block: spec is not a block model");
    spec.validate();
    const size_t B = spec.sizes.size();
    std::vector<int> offset(B, 0);
    for (size_t b = 1; b < B; ++b) offset[b] = offset[b - 1] + spec.sizes[b - 1];

    GraphSample g{spec.total_vertices(), {}, {}};
    g.colors.reserve(static_cast<size_t>(g.n));
    for (size_t b = 0; b < B; ++b) g.colors.insert(g.colors.end(), static_cast<size_t>(spec.sizes[b]), static_cast<int>(b));

    auto rng = stream.make_rng();
    // Fixed block-pair order keeps samples reproducible; each pair draws
    // from the shared stream in sequence.
    for (size_t i = 0; i < B; ++i) {
        for (size_t j = i; j < B; ++j) {
            const bool within = i == j;
            const std::int64_t M = within ? pair_count(spec.sizes[i])
                                          : static_cast<std::int64_t>(spec.sizes[i]) * spec.sizes[j];
            auto emit = [&](std::int64_t local) {
                if (within) {
                    auto [a, b] = pair_from_index(local);
                    g.edges.emplace_back(offset[i] + static_cast<int>(a), offset[i] + static_cast<int>(b));
                } else {
                    int a = offset[i] + static_cast<int>(local / spec.sizes[j]);
                    int b = offset[j] + static_cast<int>(local % spec.sizes[j]);
                    g.edges.emplace_back(a, b);
                }
            };
            if (spec.kind == EnsembleKind::block_dependent) {
                for (auto local : sample_indices(M, spec.E_matrix[i][j], rng)) emit(local);
            } else {
                const double threshold = spec.p_matrix[i][j].to_double();
                for (std::int64_t local = 0; local < M; ++local)
                    if (rng.next_bernoulli(threshold)) emit(local);
            }
        }
    }
    sort_edges(g);
    return g;
}

GraphSample sample(const EnsembleSpec& spec, const SeedStream& stream) {
    switch (spec.kind) {
        case EnsembleKind::dependent:
            return sample_dependent(spec.n, spec.E, stream);
        case EnsembleKind::independent:
            return sample_independent(spec.n, spec.p, stream);
        case EnsembleKind::block_dependent:
        case EnsembleKind::block_independent:
            return sample_block(spec, stream);
    }
    throw DomainError("sample: unknown ensemble kind");
}

std::int64_t edge_budget(int n, const Rational& p) {
    if (p.sign() < 0 || p > Rational(1)) throw DomainError("edge_budget: p out of [0, 1]");
    Rational scaled = p * Rational(BigInt(pair_count(n))) + Rational(1, 2);
    // scaled >= 0, so truncation is floor.
    return (scaled.numerator() / scaled.denominator()).to_int64();
}

void dump_sample(std::ostream& os, const GraphSample& g) {
    if (g.is_colored()) {
        bool digits = std::all_of(g.colors.begin(), g.colors.end(), [](int c) { return c >= 0 && c < 10; });
        for (size_t i = 0; i < g.colors.size(); ++i) {
            if (!digits && i) os << ',';
            os << g.colors[i];
        }
        os << ' ';
    }
    os << g.n << ' ' << g.edges.size();
    for (auto [a, b] : g.edges) os << ' ' << a << '-' << b;
    os << '\n';
}

}  // namespace sgm
