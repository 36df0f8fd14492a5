// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

namespace sgm {

// Bijection between unordered vertex pairs {i, j}, i < j, and the indices
// 0..n(n-1)/2-1: {i, j} <-> j(j-1)/2 + i. Decode is O(1) up to an integer
// square root fixup.

constexpr std::int64_t pair_count(std::int64_t n) { return n * (n - 1) / 2; }

constexpr std::int64_t pair_index(std::int64_t i, std::int64_t j) {
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

inline std::pair<std::int64_t, std::int64_t> pair_from_index(std::int64_t idx) {
    auto j = static_cast<std::int64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(idx))) / 2.0);
    while (j * (j - 1) / 2 > idx) --j;
    while ((j + 1) * j / 2 <= idx) ++j;
    return {idx - j * (j - 1) / 2, j};
}

}  // namespace sgm
