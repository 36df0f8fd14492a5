// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "sgm/bigint.hpp"

namespace sgm {

using int128 = __int128;
using uint128 = unsigned __int128;

inline BigInt bigint_from_u128(uint128 v) {
    BigInt hi(static_cast<unsigned long long>(v >> 64));
    BigInt lo(static_cast<unsigned long long>(v));
    return hi * BigInt::pow(BigInt(2l), 64) + lo;
}

inline BigInt bigint_from_i128(int128 v) {
    if (v >= 0) return bigint_from_u128(static_cast<uint128>(v));
    return -bigint_from_u128(static_cast<uint128>(-v));
}

inline double double_from_i128(int128 v) {
    return static_cast<double>(v);
}

}  // namespace sgm
