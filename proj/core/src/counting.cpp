// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0

#include "sgm/counting.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "sgm/errors.hpp"
#include "sgm/int128.hpp"

namespace sgm {

HostGraph::HostGraph(const GraphSample& g)
    : n_(g.n), edge_count_(static_cast<std::int64_t>(g.edges.size())), colors_(g.colors) {
    std::vector<int> deg(static_cast<size_t>(n_), 0);
    for (auto [a, b] : g.edges) {
        ++deg[static_cast<size_t>(a)];
        ++deg[static_cast<size_t>(b)];
    }
    offsets_.assign(static_cast<size_t>(n_) + 1, 0);
    for (int v = 0; v < n_; ++v) offsets_[static_cast<size_t>(v) + 1] = offsets_[static_cast<size_t>(v)] + static_cast<size_t>(deg[static_cast<size_t>(v)]);
    neighbors_.resize(offsets_.back());
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (auto [a, b] : g.edges) {
        neighbors_[cursor[static_cast<size_t>(a)]++] = b;
        neighbors_[cursor[static_cast<size_t>(b)]++] = a;
    }
    for (int v = 0; v < n_; ++v)
        std::sort(neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets_[static_cast<size_t>(v)]),
                  neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets_[static_cast<size_t>(v) + 1]));

    if (n_ <= kBitsetMaxVertices && n_ > 0) {
        words_ = static_cast<size_t>((n_ + 63) / 64);
        bits_.assign(static_cast<size_t>(n_) * words_, 0);
        for (auto [a, b] : g.edges) {
            bits_[static_cast<size_t>(a) * words_ + static_cast<size_t>(b) / 64] |= 1ull << (b % 64);
            bits_[static_cast<size_t>(b) * words_ + static_cast<size_t>(a) / 64] |= 1ull << (a % 64);
        }
    }
}

bool HostGraph::adjacent(int u, int v) const {
    if (!bits_.empty())
        return (bits_[static_cast<size_t>(u) * words_ + static_cast<size_t>(v) / 64] >> (v % 64)) & 1u;
    return std::binary_search(neighbors_begin(u), neighbors_end(u), v);
}

namespace {

// Static plan for one motif: vertex placement order plus, per step, the
// already-placed neighbors to match against.
struct MatchPlan {
    int v;
    std::vector<int> order;                        // motif vertex placed at each step
    std::vector<int> motif_degree;                 // degree in the motif, by step
    std::vector<std::vector<int>> earlier_steps;   // steps whose vertex is adjacent
};

MatchPlan build_plan(const Motif& m) {
    const int v = m.vertex_count();
    std::vector<int> deg(static_cast<size_t>(v), 0);
    for (auto [a, b] : m.edges()) {
        ++deg[static_cast<size_t>(a)];
        ++deg[static_cast<size_t>(b)];
    }
    std::vector<bool> placed(static_cast<size_t>(v), false);
    MatchPlan plan;
    plan.v = v;
    for (int step = 0; step < v; ++step) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int u = 0; u < v; ++u) {
            if (placed[static_cast<size_t>(u)]) continue;
            int links = 0;
            for (int w : plan.order)
                if (m.has_edge(u, w)) ++links;
            if (links > best_links || (links == best_links && deg[static_cast<size_t>(u)] > best_deg)) {
                best = u;
                best_links = links;
                best_deg = deg[static_cast<size_t>(u)];
            }
        }
        placed[static_cast<size_t>(best)] = true;
        std::vector<int> earlier;
        for (int s = 0; s < step; ++s)
            if (m.has_edge(best, plan.order[static_cast<size_t>(s)])) earlier.push_back(s);
        plan.order.push_back(best);
        plan.motif_degree.push_back(deg[static_cast<size_t>(best)]);
        plan.earlier_steps.push_back(std::move(earlier));
    }
    return plan;
}

// Counts injective homomorphisms following a plan. color_filter, when
// non-null, restricts each step's host vertex to the required color.
unsigned __int128 count_homomorphisms(const HostGraph& host, const MatchPlan& plan,
                                      const int* color_filter) {
    const int n = host.n();
    std::array<int, Motif::kMaxVertices> image{};
    std::vector<bool> used(static_cast<size_t>(n), false);
    unsigned __int128 found = 0;

    auto feasible = [&](int step, int w) {
        if (used[static_cast<size_t>(w)]) return false;
        if (host.degree(w) < plan.motif_degree[static_cast<size_t>(step)]) return false;
        if (color_filter &&
            host.colors()[static_cast<size_t>(w)] != color_filter[plan.order[static_cast<size_t>(step)]])
            return false;
        return true;
    };

    auto recurse = [&](auto&& self, int step) -> void {
        if (step == plan.v) {
            ++found;
            return;
        }
        const auto& earlier = plan.earlier_steps[static_cast<size_t>(step)];
        if (earlier.empty()) {
            for (int w = 0; w < n; ++w) {
                if (!feasible(step, w)) continue;
                image[static_cast<size_t>(step)] = w;
                used[static_cast<size_t>(w)] = true;
                self(self, step + 1);
                used[static_cast<size_t>(w)] = false;
            }
            return;
        }
        // Scan the sorted neighbor list of one anchored image and check the
        // remaining adjacency constraints pointwise.
        int anchor = image[static_cast<size_t>(earlier[0])];
        for (const int* it = host.neighbors_begin(anchor); it != host.neighbors_end(anchor); ++it) {
            int w = *it;
            if (!feasible(step, w)) continue;
            bool ok = true;
            for (size_t t = 1; t < earlier.size(); ++t) {
                if (!host.adjacent(w, image[static_cast<size_t>(earlier[t])])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[static_cast<size_t>(step)] = w;
            used[static_cast<size_t>(w)] = true;
            self(self, step + 1);
            used[static_cast<size_t>(w)] = false;
        }
    };
    recurse(recurse, 0);
    return found;
}

BigInt divide_by_group(unsigned __int128 homs, std::uint64_t group, const char* what) {
    if (homs % group != 0) throw VerificationFailed(std::string(what) + ": count not divisible by group order");
    return bigint_from_u128(homs / group);
}

}  // namespace

BigInt count_motif(const HostGraph& host, const Motif& m) {
    if (host.n() < m.vertex_count()) return BigInt(0l);
    unsigned __int128 homs = count_homomorphisms(host, build_plan(m), nullptr);
    return divide_by_group(homs, automorphism_order(m), "count_motif");
}

BigInt count_motif(const GraphSample& g, const Motif& m) { return count_motif(HostGraph(g), m); }

BigInt count_triangles(const HostGraph& host) {
    unsigned __int128 incidences = 0;
    if (host.has_bitsets()) {
        const size_t words = host.row_words();
        for (int u = 0; u < host.n(); ++u) {
            const std::uint64_t* ru = host.row(u);
            for (const int* it = host.neighbors_begin(u); it != host.neighbors_end(u); ++it) {
                int v = *it;
                if (v <= u) continue;
                const std::uint64_t* rv = host.row(v);
                int common = 0;
                for (size_t w = 0; w < words; ++w) common += std::popcount(ru[w] & rv[w]);
                incidences += static_cast<unsigned>(common);
            }
        }
    } else {
        for (int u = 0; u < host.n(); ++u) {
            for (const int* it = host.neighbors_begin(u); it != host.neighbors_end(u); ++it) {
                int v = *it;
                if (v <= u) continue;
                const int* a = host.neighbors_begin(u);
                const int* ae = host.neighbors_end(u);
                const int* b = host.neighbors_begin(v);
                const int* be = host.neighbors_end(v);
                while (a != ae && b != be) {
                    if (*a < *b)
                        ++a;
                    else if (*b < *a)
                        ++b;
                    else {
                        ++incidences;
                        ++a;
                        ++b;
                    }
                }
            }
        }
    }
    // Each triangle is seen once per edge.
    return divide_by_group(incidences, 3, "count_triangles");
}

BigInt count_triangles(const GraphSample& g) { return count_triangles(HostGraph(g)); }

BigInt count_two_stars(const HostGraph& host) {
    unsigned __int128 total = 0;
    for (int v = 0; v < host.n(); ++v) {
        auto d = static_cast<unsigned __int128>(host.degree(v));
        total += d * (d - 1) / 2;
    }
    return bigint_from_u128(total);
}

BigInt count_two_stars(const GraphSample& g) { return count_two_stars(HostGraph(g)); }

BigInt count_edges(const GraphSample& g) { return BigInt(static_cast<unsigned long long>(g.edges.size())); }

BigInt count_colored_motif(const HostGraph& host, const Motif& m, const std::vector<int>& coloring) {
    if (host.colors().empty()) throw DomainError("count_colored_motif: host graph carries no colors");
    if (coloring.size() != static_cast<size_t>(m.vertex_count()))
        throw DomainError("count_colored_motif: coloring size mismatch");
    if (host.n() < m.vertex_count()) return BigInt(0l);

    std::uint64_t stabilizer = 0;
    for (const auto& sigma : automorphisms(m)) {
        bool preserves = true;
        for (int u = 0; u < m.vertex_count(); ++u) {
            if (coloring[static_cast<size_t>(sigma[static_cast<size_t>(u)])] != coloring[static_cast<size_t>(u)]) {
                preserves = false;
                break;
            }
        }
        if (preserves) ++stabilizer;
    }
    unsigned __int128 homs = count_homomorphisms(host, build_plan(m), coloring.data());
    return divide_by_group(homs, stabilizer, "count_colored_motif");
}

BigInt count_colored_motif(const GraphSample& g, const Motif& m, const std::vector<int>& coloring) {
    return count_colored_motif(HostGraph(g), m, coloring);
}

std::vector<std::vector<int>> distinct_colorings(const Motif& m, int num_colors) {
    if (num_colors < 1) throw DomainError("distinct_colorings: need at least one color");
    const int v = m.vertex_count();
    auto autos = automorphisms(m);
    std::vector<std::vector<int>> reps;
    std::vector<int> alpha(static_cast<size_t>(v), 0);
    for (;;) {
        // Keep alpha only if it is the lexicographic minimum of its orbit.
        bool minimal = true;
        std::vector<int> permuted(static_cast<size_t>(v));
        for (const auto& sigma : autos) {
            for (int u = 0; u < v; ++u) permuted[static_cast<size_t>(u)] = alpha[static_cast<size_t>(sigma[static_cast<size_t>(u)])];
            if (permuted < alpha) {
                minimal = false;
                break;
            }
        }
        if (minimal) reps.push_back(alpha);
        int pos = v - 1;
        while (pos >= 0 && alpha[static_cast<size_t>(pos)] == num_colors - 1) {
            alpha[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++alpha[static_cast<size_t>(pos)];
    }
    return reps;
}

}  // namespace sgm
