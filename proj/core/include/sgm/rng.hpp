// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace sgm {

// Reproducible random streams. A (master_seed, replica_index) pair defines
// a stream with no sequential dependence between replicas: the xoshiro256++
// state is filled from SplitMix64 outputs of a mix of the two words, the
// seeding scheme recommended for this generator family. Identical pairs
// give bit-identical streams on every platform; all derived quantities
// (bounded integers, doubles) are computed here rather than through
// implementation-defined std distributions.

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

// Collapses a 64-bit label into a well-mixed word; used to derive
// independent sub-experiments from one master seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t label) {
    SplitMix64 sm(seed ^ (0xBF58476D1CE4E5B9ull * (label + 1)));
    return sm.next();
}

class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& w : s_) w = sm.next();
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Unbiased integer in [0, bound) by rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t x = next();
            if (x >= threshold) return x % bound;
        }
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool next_bernoulli(double p) { return next_double() < p; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t s_[4];
};

// Identifies one replica of one experiment.
struct SeedStream {
    std::uint64_t master_seed = 0;
    std::uint64_t replica_index = 0;

    Xoshiro256pp make_rng() const { return Xoshiro256pp(mix_seed(master_seed, replica_index)); }
};

}  // namespace sgm
