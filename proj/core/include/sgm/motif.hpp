// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "sgm/bigint.hpp"

namespace sgm {

// A fixed small pattern graph whose copies are counted in host graphs.
// Vertices are 0..vertex_count-1, every vertex lies on at least one edge,
// and edges are stored normalized (i < j, sorted, no duplicates).
class Motif {
public:
    // Validates and normalizes; throws DomainError on self-loops, duplicate
    // edges, isolated vertices, out-of-range endpoints, or vertex_count
    // outside [2, kMaxVertices].
    Motif(int vertex_count, std::vector<std::pair<int, int>> edges, std::string name = "");

    static constexpr int kMaxVertices = 8;

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::string& name() const { return name_; }

    bool has_edge(int a, int b) const;

    friend bool operator==(const Motif& a, const Motif& b) {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
    }

private:
    int vertex_count_;
    std::vector<std::pair<int, int>> edges_;
    std::string name_;
};

enum class BuiltinMotif { edge, two_star, triangle, square };

Motif make_builtin(BuiltinMotif which);
// Accepts "edge", "two_star", "triangle", "square"; throws DomainError otherwise.
Motif make_builtin(const std::string& name);

// All vertex permutations that fix the edge set, as permutation vectors.
// Brute force over vertex_count! permutations; exact at this scale.
std::vector<std::vector<int>> automorphisms(const Motif& m);

// Order of the symmetry group of the motif; always divides vertex_count!.
std::uint64_t automorphism_order(const Motif& m);

// Number of copies of the motif in the complete graph on n vertices:
// n(n-1)...(n+1-v) / automorphism_order. Zero when n < v.
BigInt copies_in_complete(const Motif& m, long n);

// Text edge-list format: first line the vertex count, then one "i j" pair
// per line with 0 <= i < j < v. '#' starts a comment.
Motif read_motif(std::istream& in, std::string name = "");
Motif load_motif_file(const std::string& path);
void write_motif(std::ostream& out, const Motif& m);

}  // namespace sgm
