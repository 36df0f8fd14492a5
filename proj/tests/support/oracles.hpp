// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0
//
// Test-only brute-force reference implementations. Everything here takes
// the slow, obviously-correct route (exhaustive enumeration and exact
// rational weights) and stays independent of the code paths it checks.

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "sgm/ensemble.hpp"
#include "sgm/motif.hpp"
#include "sgm/rational.hpp"
#include "sgm/rng.hpp"

namespace sgm::testing {

// All copies of the motif in the host, found by trying every injective
// vertex map and collecting distinct image edge sets.
std::set<std::vector<std::pair<int, int>>> brute_copies(const GraphSample& g, const Motif& m);

std::int64_t brute_count_motif(const GraphSample& g, const Motif& m);

// Ordered-pair overlap histogram in K_n via pairwise intersection of the
// brute-enumerated copies; index k = number of shared edges.
std::vector<std::int64_t> brute_overlap_table(const Motif& m, int n);

GraphSample complete_graph(int n);
GraphSample graph_from_edges(int n, std::vector<std::pair<int, int>> edges);

// Every graph on n labeled vertices (2^(n(n-1)/2) of them; keep n tiny).
std::vector<GraphSample> all_graphs(int n);
// Every graph with exactly E edges.
std::vector<GraphSample> graphs_with_edges(int n, std::int64_t E);

struct ExactEnsembleMoments {
    Rational mean;
    Rational variance;
    Rational covariance_with_edges;
    Rational edge_variance;
    std::optional<Rational> residual_variance;  // absent when edge variance is zero
};

// Exact moments of the motif count over the uniform fixed-edge-count
// ensemble, by full enumeration.
ExactEnsembleMoments enumerate_dependent_moments(const Motif& m, int n, std::int64_t E);

// Exact moments over the independent-edge ensemble with rational p, each
// graph weighted p^{edges} (1-p)^{N-edges}.
ExactEnsembleMoments enumerate_independent_moments(const Motif& m, int n, const Rational& p);

// Random motif with 2..max_vertices vertices, no isolated vertex.
Motif random_motif(Xoshiro256pp& rng, int max_vertices = 5);

bool contains_triangle(const Motif& m);

}  // namespace sgm::testing
