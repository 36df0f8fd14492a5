// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0

#include "sgm/census.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>

#include "sgm/errors.hpp"
#include "sgm/int128.hpp"
#include "sgm/pair_index.hpp"

namespace sgm {

namespace {

// Distinct relabelings of the motif on {0..v-1}, each a sorted edge list
// over local pair indices. There are v!/|S_H| of them.
std::vector<std::vector<std::uint32_t>> labelled_variants(const Motif& m) {
    const int v = m.vertex_count();
    std::vector<int> perm(static_cast<size_t>(v));
    std::iota(perm.begin(), perm.end(), 0);
    std::set<std::vector<std::uint32_t>> seen;
    do {
        std::vector<std::uint32_t> ids;
        ids.reserve(m.edges().size());
        for (auto [a, b] : m.edges()) ids.push_back(static_cast<std::uint32_t>(pair_index(perm[a], perm[b])));
        std::sort(ids.begin(), ids.end());
        seen.insert(std::move(ids));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {seen.begin(), seen.end()};
}

// Sum of squared run lengths of a sorted sequence.
template <typename Vec>
unsigned __int128 sum_squared_runs(Vec& keys) {
    std::sort(keys.begin(), keys.end());
    unsigned __int128 total = 0;
    for (size_t i = 0; i < keys.size();) {
        size_t j = i + 1;
        while (j < keys.size() && keys[j] == keys[i]) ++j;
        auto run = static_cast<unsigned __int128>(j - i);
        total += run * run;
        i = j;
    }
    return total;
}

// Enumerates k-element subsets of each copy's edge list and tallies how
// often each subset occurs across copies; returns sum over subsets of
// (occurrence count)^2, i.e. the number of ordered copy pairs jointly
// containing some k-subset, summed over subsets.
unsigned __int128 subset_incidence_square_sum(const std::vector<std::vector<std::uint32_t>>& copies,
                                              int k, int bits_per_edge) {
    std::vector<int> pick(static_cast<size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    const bool packable = k * bits_per_edge <= 64;

    std::vector<std::uint64_t> packed;
    std::vector<std::u32string> strings;

    for (const auto& copy : copies) {
        const int l = static_cast<int>(copy.size());
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            if (packable) {
                std::uint64_t key = 0;
                for (int t = 0; t < k; ++t)
                    key = (key << bits_per_edge) | copy[static_cast<size_t>(pick[t])];
                packed.push_back(key);
            } else {
                std::u32string key;
                key.reserve(static_cast<size_t>(k));
                for (int t = 0; t < k; ++t)
                    key.push_back(static_cast<char32_t>(copy[static_cast<size_t>(pick[t])]));
                strings.push_back(std::move(key));
            }
            // next combination
            int t = k - 1;
            while (t >= 0 && pick[t] == l - k + t) --t;
            if (t < 0) break;
            ++pick[t];
            for (int u = t + 1; u < k; ++u) pick[u] = pick[u - 1] + 1;
        }
    }
    return packable ? sum_squared_runs(packed) : sum_squared_runs(strings);
}

}  // namespace

std::vector<std::vector<std::uint32_t>> enumerate_copies(const Motif& m, long n) {
    std::vector<std::vector<std::uint32_t>> copies;
    if (n < m.vertex_count()) return copies;
    const int v = m.vertex_count();
    auto variants = labelled_variants(m);

    // Walk all v-subsets of [0, n) in lexicographic order; relabel each
    // variant through the monotone map {0..v-1} -> subset.
    std::vector<long> subset(static_cast<size_t>(v));
    std::iota(subset.begin(), subset.end(), 0);
    std::vector<std::pair<int, int>> local_pairs;  // decode of local pair indices
    {
        long max_local = pair_count(v);
        for (long idx = 0; idx < max_local; ++idx) {
            auto [i, j] = pair_from_index(idx);
            local_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    while (true) {
        for (const auto& variant : variants) {
            std::vector<std::uint32_t> ids;
            ids.reserve(variant.size());
            for (auto local : variant) {
                auto [i, j] = local_pairs[local];
                ids.push_back(static_cast<std::uint32_t>(
                    pair_index(subset[static_cast<size_t>(i)], subset[static_cast<size_t>(j)])));
            }
            std::sort(ids.begin(), ids.end());
            copies.push_back(std::move(ids));
        }
        int t = v - 1;
        while (t >= 0 && subset[static_cast<size_t>(t)] == n - v + t) --t;
        if (t < 0) break;
        ++subset[static_cast<size_t>(t)];
        for (int u = t + 1; u < v; ++u) subset[static_cast<size_t>(u)] = subset[static_cast<size_t>(u - 1)] + 1;
    }
    return copies;
}

OverlapTable overlap_table(const Motif& m, long n, std::int64_t work_budget) {
    if (n < 0) throw DomainError("overlap_table: n must be nonnegative");
    const int l = m.edge_count();
    OverlapTable table{m, n, std::vector<BigInt>(static_cast<size_t>(l) + 1, BigInt(0l))};

    BigInt copies_big = copies_in_complete(m, n);
    if (copies_big.is_zero()) return table;

    // Work estimate: every copy emits one key per edge subset.
    if (l >= 62 || !(copies_big * BigInt::pow(BigInt(2l), static_cast<unsigned long>(l))).fits_int64() ||
        (copies_big * BigInt::pow(BigInt(2l), static_cast<unsigned long>(l))).to_int64() > work_budget) {
        throw FeasibilityExceeded("overlap_table: " + copies_big.to_string() + " copies * 2^" +
                                  std::to_string(l) + " subsets exceeds budget");
    }

    auto copies = enumerate_copies(m, n);
    const auto c = static_cast<std::int64_t>(copies.size());

    // incidence[k] = sum over ordered copy pairs of C(#shared edges, k).
    // The exact-overlap histogram follows by binomial inversion.
    std::vector<BigInt> incidence(static_cast<size_t>(l) + 1);
    incidence[0] = BigInt(c) * BigInt(c);
    incidence[static_cast<size_t>(l)] = BigInt(c);  // copies are distinct edge sets
    const int bits_per_edge =
        std::max(1, static_cast<int>(std::bit_width(static_cast<std::uint64_t>(pair_count(n)))));
    for (int k = 1; k < l; ++k)
        incidence[static_cast<size_t>(k)] = bigint_from_u128(subset_incidence_square_sum(copies, k, bits_per_edge));

    for (int j = 0; j <= l; ++j) {
        BigInt sum(0l);
        for (int k = j; k <= l; ++k) {
            BigInt term = BigInt::binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j)) *
                          incidence[static_cast<size_t>(k)];
            if ((k - j) % 2 == 0)
                sum += term;
            else
                sum -= term;
        }
        if (sum.sign() < 0) throw VerificationFailed("overlap_table: negative bin count");
        table.counts[static_cast<size_t>(j)] = std::move(sum);
    }
    return table;
}

namespace {

OverlapPolynomial fit_one(const Motif& m, int k, const std::vector<OverlapTable>& node_tables) {
    const int v = m.vertex_count();
    const size_t fit_nodes = static_cast<size_t>(2 * v + 1);
    std::vector<std::pair<Rational, Rational>> pts;
    pts.reserve(fit_nodes);
    for (size_t t = 0; t < fit_nodes; ++t)
        pts.emplace_back(Rational(BigInt(node_tables[t].n)), Rational(node_tables[t].counts[static_cast<size_t>(k)]));
    Polynomial poly = Polynomial::interpolate(pts);
    for (size_t t = fit_nodes; t < node_tables.size(); ++t) {
        Rational expect(node_tables[t].counts[static_cast<size_t>(k)]);
        if (poly(Rational(BigInt(node_tables[t].n))) != expect)
            throw VerificationFailed("overlap_polynomial: verification node mismatch at n=" +
                                     std::to_string(node_tables[t].n));
    }
    return OverlapPolynomial{m, k, std::move(poly)};
}

std::vector<OverlapTable> polynomial_node_tables(const Motif& m, std::int64_t work_budget) {
    const int v = m.vertex_count();
    std::vector<OverlapTable> tables;
    // 2v+1 fit nodes then 2 verification nodes, consecutive from n=v.
    for (long n = v; n <= 3 * v + 2; ++n) tables.push_back(overlap_table(m, n, work_budget));
    return tables;
}

}  // namespace

OverlapPolynomial overlap_polynomial(const Motif& m, int k, std::int64_t work_budget) {
    if (k < 0 || k > m.edge_count()) throw DomainError("overlap_polynomial: k out of range");
    return fit_one(m, k, polynomial_node_tables(m, work_budget));
}

std::vector<OverlapPolynomial> overlap_polynomials(const Motif& m, std::int64_t work_budget) {
    auto tables = polynomial_node_tables(m, work_budget);
    std::vector<OverlapPolynomial> out;
    out.reserve(static_cast<size_t>(m.edge_count()) + 1);
    for (int k = 0; k <= m.edge_count(); ++k) out.push_back(fit_one(m, k, tables));
    return out;
}

}  // namespace sgm
