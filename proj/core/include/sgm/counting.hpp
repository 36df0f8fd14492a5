// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "sgm/bigint.hpp"
#include "sgm/ensemble.hpp"
#include "sgm/motif.hpp"

namespace sgm {

// Read-only adjacency view of a sample, built once and shared by all
// counts on that sample. Keeps sorted neighbor lists plus one bitset row
// per vertex for O(1) adjacency tests on hosts up to kBitsetMaxVertices.
class HostGraph {
public:
    explicit HostGraph(const GraphSample& g);

    static constexpr int kBitsetMaxVertices = 2048;

    int n() const { return n_; }
    std::int64_t edge_count() const { return edge_count_; }
    int degree(int v) const { return static_cast<int>(offsets_[static_cast<size_t>(v) + 1] - offsets_[static_cast<size_t>(v)]); }
    bool adjacent(int u, int v) const;
    const int* neighbors_begin(int v) const { return neighbors_.data() + offsets_[static_cast<size_t>(v)]; }
    const int* neighbors_end(int v) const { return neighbors_.data() + offsets_[static_cast<size_t>(v) + 1]; }
    bool has_bitsets() const { return !bits_.empty(); }
    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<size_t>(v) * words_; }
    size_t row_words() const { return words_; }
    const std::vector<int>& colors() const { return colors_; }

private:
    int n_;
    std::int64_t edge_count_;
    std::vector<std::size_t> offsets_;
    std::vector<int> neighbors_;
    size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<int> colors_;
};

// Number of copies of the motif in the host, one copy per edge subset:
// injective homomorphisms counted by backtracking, divided by the
// automorphism order (divisibility asserted).
BigInt count_motif(const HostGraph& host, const Motif& m);
BigInt count_motif(const GraphSample& g, const Motif& m);

// Specialized counters; each agrees with count_motif on the matching motif.
BigInt count_triangles(const HostGraph& host);
BigInt count_triangles(const GraphSample& g);
BigInt count_two_stars(const HostGraph& host);
BigInt count_two_stars(const GraphSample& g);
BigInt count_edges(const GraphSample& g);

// Copies whose vertex colors realize the given coloring of the motif (up
// to color-preserving motif automorphisms). The host must carry colors.
BigInt count_colored_motif(const HostGraph& host, const Motif& m, const std::vector<int>& coloring);
BigInt count_colored_motif(const GraphSample& g, const Motif& m, const std::vector<int>& coloring);

// Representatives of the motif colorings with num_colors colors, one per
// orbit under the automorphism group. Summing count_colored_motif over
// these gives count_motif.
std::vector<std::vector<int>> distinct_colorings(const Motif& m, int num_colors);

}  // namespace sgm
