// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "sgm/rational.hpp"
#include "sgm/rng.hpp"

namespace sgm {

// One sampled simple graph. Edges are normalized (i < j) and sorted;
// colors is empty for uncolored samples, else one block id per vertex.
struct GraphSample {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> colors;

    bool is_colored() const { return !colors.empty(); }
};

enum class EnsembleKind { dependent, independent, block_dependent, block_independent };

// Which distribution to sample. For the simple kinds only n plus E or p
// are read; the block kinds use sizes and the symmetric per-color-pair
// matrices (E_matrix counts, p_matrix probabilities).
struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::independent;
    int n = 0;
    std::int64_t E = 0;
    Rational p;
    std::vector<int> sizes;
    std::vector<std::vector<std::int64_t>> E_matrix;
    std::vector<std::vector<Rational>> p_matrix;

    // Throws DomainError when counts/probabilities are out of range or the
    // matrices are not symmetric with matching dimensions.
    void validate() const;
    int total_vertices() const;
};

// Uniform over graphs on n vertices with exactly E edges: E distinct pair
// indices are drawn without replacement and decoded.
GraphSample sample_dependent(int n, std::int64_t E, const SeedStream& stream);

// Every pair independently an edge with probability p.
GraphSample sample_independent(int n, const Rational& p, const SeedStream& stream);

// Block model: vertices are laid out color by color; each color pair
// (i <= j) gets either exactly E_ij uniformly placed edges (dependent) or
// independent edges with probability p_ij, independently across pairs.
GraphSample sample_block(const EnsembleSpec& spec, const SeedStream& stream);

// Dispatch on spec.kind.
GraphSample sample(const EnsembleSpec& spec, const SeedStream& stream);

// Edge budget for the dependent model at density p: round(p * n(n-1)/2),
// halves rounded up.
std::int64_t edge_budget(int n, const Rational& p);

// One line per sample: "n E i1-j1 i2-j2 ...". Colored samples prepend the
// color string, e.g. "0011 4 2 0-2 1-3".
void dump_sample(std::ostream& os, const GraphSample& g);

}  // namespace sgm
