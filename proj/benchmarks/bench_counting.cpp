// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "sgm/counting.hpp"
#include "sgm/ensemble.hpp"
#include "sgm/motif.hpp"

using namespace sgm;

namespace {

GraphSample dense_sample(int n) {
    return sample_independent(n, Rational(3, 10), SeedStream{7, 0});
}

void TriangleCount(benchmark::State& state) {
    auto g = dense_sample(static_cast<int>(state.range(0)));
    HostGraph host(g);
    for (auto _ : state) {
        auto t = count_triangles(host);
        benchmark::DoNotOptimize(t);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(TriangleCount)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void TriangleViaBacktracker(benchmark::State& state) {
    auto g = dense_sample(static_cast<int>(state.range(0)));
    HostGraph host(g);
    Motif triangle = make_builtin(BuiltinMotif::triangle);
    for (auto _ : state) {
        auto t = count_motif(host, triangle);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(TriangleViaBacktracker)->RangeMultiplier(2)->Range(32, 256);

void SquareCount(benchmark::State& state) {
    auto g = dense_sample(static_cast<int>(state.range(0)));
    HostGraph host(g);
    Motif square = make_builtin(BuiltinMotif::square);
    for (auto _ : state) {
        auto t = count_motif(host, square);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(SquareCount)->RangeMultiplier(2)->Range(32, 128);

void HostGraphBuild(benchmark::State& state) {
    auto g = dense_sample(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        HostGraph host(g);
        benchmark::DoNotOptimize(host.edge_count());
    }
}
BENCHMARK(HostGraphBuild)->RangeMultiplier(2)->Range(32, 512);

}  // namespace

BENCHMARK_MAIN();
