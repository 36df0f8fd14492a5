// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <numeric>
#include <sstream>

#include "doctest.h"
#include "sgm/errors.hpp"
#include "sgm/motif.hpp"
#include "sgm/rng.hpp"
#include "support/oracles.hpp"

using namespace sgm;
namespace oracle = sgm::testing;

TEST_SUITE_BEGIN("motif");

TEST_CASE("builtins have the expected shape") {
    Motif edge = make_builtin(BuiltinMotif::edge);
    CHECK(edge.vertex_count() == 2);
    CHECK(edge.edge_count() == 1);

    Motif two_star = make_builtin("two_star");
    CHECK(two_star.vertex_count() == 3);
    CHECK(two_star.edge_count() == 2);

    Motif triangle = make_builtin("triangle");
    CHECK(triangle.vertex_count() == 3);
    CHECK(triangle.edge_count() == 3);

    Motif square = make_builtin("square");
    CHECK(square.vertex_count() == 4);
    CHECK(square.edge_count() == 4);
    CHECK(automorphism_order(square) == 8);  // dihedral group

    CHECK_THROWS_AS(make_builtin("pentagon"), DomainError);
}

TEST_CASE("validation rejects malformed motifs") {
    CHECK_THROWS_AS(Motif(3, {{0, 0}}), DomainError);          // self-loop
    CHECK_THROWS_AS(Motif(3, {{0, 1}, {1, 0}}), DomainError);  // duplicate
    CHECK_THROWS_AS(Motif(3, {{0, 1}}), DomainError);          // vertex 2 isolated
    CHECK_THROWS_AS(Motif(3, {{0, 3}, {1, 2}}), DomainError);  // out of range
    CHECK_THROWS_AS(Motif(2, {}), DomainError);                // no edges
    CHECK_THROWS_AS(Motif(9, {{0, 1}}), DomainError);          // too large
    CHECK(Motif(3, {{2, 0}, {1, 2}}).edges() == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});
}

TEST_CASE("automorphism orders of the builtins") {
    CHECK(automorphism_order(make_builtin(BuiltinMotif::edge)) == 2);
    CHECK(automorphism_order(make_builtin(BuiltinMotif::two_star)) == 2);
    CHECK(automorphism_order(make_builtin(BuiltinMotif::triangle)) == 6);
    CHECK(automorphism_order(make_builtin(BuiltinMotif::square)) == 8);
    // path on 4 vertices: reversal only
    CHECK(automorphism_order(Motif(4, {{0, 1}, {1, 2}, {2, 3}})) == 2);
    // complete graph K4: all 4! permutations
    CHECK(automorphism_order(Motif(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) == 24);
}

TEST_CASE("automorphism order divides v! and is relabeling invariant") {
    Xoshiro256pp rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        Motif m = oracle::random_motif(rng);
        std::uint64_t factorial = 1;
        for (int i = 2; i <= m.vertex_count(); ++i) factorial *= static_cast<std::uint64_t>(i);
        std::uint64_t order = automorphism_order(m);
        CHECK(order >= 1);
        CHECK(factorial % order == 0);

        // Relabel through a random permutation.
        std::vector<int> perm(static_cast<size_t>(m.vertex_count()));
        std::iota(perm.begin(), perm.end(), 0);
        for (size_t i = perm.size(); i > 1; --i)
            std::swap(perm[i - 1], perm[rng.next_below(i)]);
        std::vector<std::pair<int, int>> edges;
        for (auto [a, b] : m.edges()) edges.emplace_back(perm[static_cast<size_t>(a)], perm[static_cast<size_t>(b)]);
        CHECK(automorphism_order(Motif(m.vertex_count(), edges)) == order);
    }
}

TEST_CASE("copies_in_complete matches enumeration") {
    Motif triangle = make_builtin(BuiltinMotif::triangle);
    Motif two_star = make_builtin(BuiltinMotif::two_star);
    Motif square = make_builtin(BuiltinMotif::square);

    CHECK(copies_in_complete(triangle, 4) ==
          BigInt(oracle::brute_count_motif(oracle::complete_graph(4), triangle)));
    CHECK(copies_in_complete(triangle, 4) == BigInt(4l));
    CHECK(copies_in_complete(two_star, 3) ==
          BigInt(oracle::brute_count_motif(oracle::complete_graph(3), two_star)));
    CHECK(copies_in_complete(two_star, 3) == BigInt(3l));
    CHECK(copies_in_complete(square, 3) == BigInt(0l));
    CHECK(copies_in_complete(square, 0) == BigInt(0l));
}

TEST_CASE("copy count times group order is the falling factorial") {
    Xoshiro256pp rng(55);
    for (int trial = 0; trial < 20; ++trial) {
        Motif m = oracle::random_motif(rng);
        for (long n = m.vertex_count(); n <= 12; ++n) {
            BigInt expected = BigInt::falling_factorial(BigInt(n), static_cast<unsigned long>(m.vertex_count()));
            CHECK(copies_in_complete(m, n) * BigInt(static_cast<unsigned long>(automorphism_order(m))) == expected);
        }
    }
}

TEST_CASE("edge list file format round trip") {
    Motif square = make_builtin(BuiltinMotif::square);
    std::stringstream ss;
    write_motif(ss, square);
    Motif back = read_motif(ss, "square");
    CHECK(back == square);

    std::stringstream commented("# a square\n4\n0 1\n1 2\n2 3\n0 3\n");
    CHECK(read_motif(commented) == square);

    std::stringstream bad_header("x\n0 1\n");
    CHECK_THROWS_AS(read_motif(bad_header), DomainError);
    std::stringstream bad_edge("3\n0 1\nnope\n");
    CHECK_THROWS_AS(read_motif(bad_edge), DomainError);
    std::stringstream empty("");
    CHECK_THROWS_AS(read_motif(empty), DomainError);
    CHECK_THROWS_AS(load_motif_file("/nonexistent/motif.txt"), DomainError);
}

TEST_SUITE_END();
