// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "sgm/bigint.hpp"
#include "sgm/motif.hpp"
#include "sgm/polynomial.hpp"

namespace sgm {

// counts[k] is the number of ordered pairs of copies of the motif in the
// complete graph on n vertices sharing exactly k edges, k = 0..edge_count.
// Identical pairs are included, so counts sum to copies^2 and
// counts[edge_count] equals the copy count.
struct OverlapTable {
    Motif motif;
    long n;
    std::vector<BigInt> counts;
};

// counts[k] as an exact polynomial in n, valid for every n >= 0.
struct OverlapPolynomial {
    Motif motif;
    int k;
    Polynomial poly;
};

// Default budget for the exact enumeration behind overlap_table, measured
// in generated edge-subset keys (copies * 2^edges).
inline constexpr std::int64_t kDefaultCensusBudget = 250'000'000;

// All copies of the motif in K_n, each as a sorted list of pair indices.
std::vector<std::vector<std::uint32_t>> enumerate_copies(const Motif& m, long n);

// Exact overlap table at a fixed n. Throws FeasibilityExceeded when the
// work estimate exceeds the budget.
OverlapTable overlap_table(const Motif& m, long n, std::int64_t work_budget = kDefaultCensusBudget);

// Exact closed form of counts[k] as a polynomial in n (degree <= 2v),
// interpolated through 2v+1 consecutive integer nodes starting at v and
// verified at two extra nodes. Throws DomainError for k outside [0, ℓ],
// VerificationFailed if the verification nodes disagree.
OverlapPolynomial overlap_polynomial(const Motif& m, int k,
                                     std::int64_t work_budget = kDefaultCensusBudget);

// All ℓ+1 polynomials with the node tables computed once.
std::vector<OverlapPolynomial> overlap_polynomials(const Motif& m,
                                                   std::int64_t work_budget = kDefaultCensusBudget);

}  // namespace sgm
