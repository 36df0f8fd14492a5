// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "sgm/counting.hpp"
#include "sgm/ensemble.hpp"
#include "sgm/errors.hpp"
#include "support/oracles.hpp"

using namespace sgm;
namespace oracle = sgm::testing;

TEST_SUITE_BEGIN("counting");

TEST_CASE("counts on named hosts") {
    Motif triangle = make_builtin(BuiltinMotif::triangle);
    Motif two_star = make_builtin(BuiltinMotif::two_star);
    Motif square = make_builtin(BuiltinMotif::square);

    auto k4 = oracle::complete_graph(4);
    CHECK(count_motif(k4, triangle) == BigInt(4l));
    CHECK(count_motif(k4, square) == BigInt(3l));
    CHECK(count_triangles(oracle::complete_graph(5)) == BigInt(10l));
    CHECK(count_triangles(k4) == BigInt(4l));
    CHECK(count_edges(k4) == BigInt(6l));

    auto five_cycle = oracle::graph_from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    CHECK(count_triangles(five_cycle) == BigInt(0l));
    CHECK(count_motif(five_cycle, triangle) == BigInt(0l));

    auto empty = GraphSample{6, {}, {}};
    CHECK(count_motif(empty, triangle) == BigInt(0l));
    CHECK(count_edges(empty) == BigInt(0l));

    auto triangle_graph = oracle::graph_from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(count_two_stars(triangle_graph) == BigInt(3l));
    auto path3 = oracle::graph_from_edges(3, {{0, 1}, {1, 2}});
    CHECK(count_two_stars(path3) == BigInt(1l));
    auto star3 = oracle::graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(count_two_stars(star3) == BigInt(3l));
}

TEST_CASE("specialized counters agree with the generic one on random hosts") {
    Motif triangle = make_builtin(BuiltinMotif::triangle);
    Motif two_star = make_builtin(BuiltinMotif::two_star);
    for (std::uint64_t r = 0; r < 200; ++r) {
        int n = 4 + static_cast<int>(r % 9);  // up to 12
        auto g = sample_independent(n, Rational(2, 5), SeedStream{31337, r});
        HostGraph host(g);
        BigInt tri = count_triangles(host);
        CHECK(tri == count_motif(host, triangle));
        CHECK(tri == BigInt(oracle::brute_count_motif(g, triangle)));
        BigInt stars = count_two_stars(host);
        CHECK(stars == count_motif(host, two_star));
        CHECK(stars == BigInt(oracle::brute_count_motif(g, two_star)));
    }
}

TEST_CASE("generic counter agrees with brute force for random motifs") {
    Xoshiro256pp rng(606);
    for (int trial = 0; trial < 25; ++trial) {
        Motif m = oracle::random_motif(rng, 4);
        auto g = sample_independent(9, Rational(1, 2), SeedStream{808, static_cast<std::uint64_t>(trial)});
        CHECK(count_motif(g, m) == BigInt(oracle::brute_count_motif(g, m)));
    }
    for (int trial = 0; trial < 5; ++trial) {
        Motif m = oracle::random_motif(rng, 5);
        auto g = sample_independent(8, Rational(3, 5), SeedStream{809, static_cast<std::uint64_t>(trial)});
        CHECK(count_motif(g, m) == BigInt(oracle::brute_count_motif(g, m)));
    }
}

TEST_CASE("counter on complete hosts reproduces the closed form") {
    Xoshiro256pp rng(607);
    std::vector<Motif> motifs = {make_builtin(BuiltinMotif::edge), make_builtin(BuiltinMotif::two_star),
                                 make_builtin(BuiltinMotif::triangle), make_builtin(BuiltinMotif::square),
                                 oracle::random_motif(rng, 5), oracle::random_motif(rng, 5)};
    for (const auto& m : motifs)
        for (int n = m.vertex_count(); n <= 10; ++n)
            CHECK(count_motif(oracle::complete_graph(n), m) == copies_in_complete(m, n));
}

TEST_CASE("disconnected motifs are counted correctly") {
    // two disjoint edges
    Motif matching(4, {{0, 1}, {2, 3}}, "matching");
    CHECK(automorphism_order(matching) == 8);
    auto k4 = oracle::complete_graph(4);
    CHECK(count_motif(k4, matching) == BigInt(oracle::brute_count_motif(k4, matching)));
    CHECK(count_motif(k4, matching) == BigInt(3l));
    for (int n = 4; n <= 9; ++n)
        CHECK(count_motif(oracle::complete_graph(n), matching) == copies_in_complete(matching, n));
}

TEST_CASE("colored counting requires colors and validates input") {
    Motif triangle = make_builtin(BuiltinMotif::triangle);
    auto plain = oracle::complete_graph(4);
    CHECK_THROWS_AS(count_colored_motif(plain, triangle, {0, 0, 0}), DomainError);
    GraphSample colored = plain;
    colored.colors = {0, 1, 0, 1};
    CHECK_THROWS_AS(count_colored_motif(colored, triangle, {0, 0}), DomainError);
    CHECK_NOTHROW(count_colored_motif(colored, triangle, {0, 0, 0}));
    // a coloring demanding three distinct colors finds nothing in a 2-colored host
    CHECK(count_colored_motif(colored, triangle, {0, 1, 2}) == BigInt(0l));
}

TEST_CASE("coloring orbit representatives") {
    Motif triangle = make_builtin(BuiltinMotif::triangle);
    auto reps = distinct_colorings(triangle, 2);
    CHECK(reps.size() == 4);  // 000 001 011 111

    Motif path3 = make_builtin(BuiltinMotif::two_star);
    // center distinguishable from the leaves: 2 * 3 = 6 classes
    CHECK(distinct_colorings(path3, 2).size() == 6);

    CHECK(distinct_colorings(triangle, 1).size() == 1);
    CHECK_THROWS_AS(distinct_colorings(triangle, 0), DomainError);
}

TEST_CASE("colored counts are invariant under representative choice") {
    Motif two_star = make_builtin(BuiltinMotif::two_star);
    EnsembleSpec spec;
    spec.kind = EnsembleKind::block_independent;
    spec.sizes = {5, 5};
    spec.p_matrix = {{Rational(1, 2), Rational(1, 5)}, {Rational(1, 5), Rational(2, 5)}};
    auto g = sample_block(spec, SeedStream{111, 0});
    // two_star colorings (0,1,0) and (0,0,1) name the same orbit: leaves {1,0}
    CHECK(count_colored_motif(g, two_star, {0, 1, 0}) == count_colored_motif(g, two_star, {0, 0, 1}));
}

TEST_CASE("colored counts add up to the total over orbit representatives") {
    for (auto which : {BuiltinMotif::two_star, BuiltinMotif::triangle, BuiltinMotif::square}) {
        Motif m = make_builtin(which);
        for (std::uint64_t r = 0; r < 6; ++r) {
            EnsembleSpec spec;
            spec.kind = EnsembleKind::block_independent;
            spec.sizes = {6, 5, 4};
            spec.p_matrix = {{Rational(1, 2), Rational(1, 4), Rational(1, 8)},
                             {Rational(1, 4), Rational(2, 5), Rational(1, 3)},
                             {Rational(1, 8), Rational(1, 3), Rational(3, 5)}};
            auto g = sample_block(spec, SeedStream{42 + r, r});
            HostGraph host(g);
            BigInt total(0l);
            for (const auto& alpha : distinct_colorings(m, 3)) total += count_colored_motif(host, m, alpha);
            CHECK(total == count_motif(host, m));
        }
    }
}

TEST_CASE("single-color counting equals plain counting") {
    Motif triangle = make_builtin(BuiltinMotif::triangle);
    EnsembleSpec spec;
    spec.kind = EnsembleKind::block_dependent;
    spec.sizes = {10};
    spec.E_matrix = {{20}};
    auto g = sample_block(spec, SeedStream{7, 7});
    auto reps = distinct_colorings(triangle, 1);
    REQUIRE(reps.size() == 1);
    CHECK(count_colored_motif(g, triangle, reps[0]) == count_motif(g, triangle));
}

TEST_SUITE_END();
