// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "sgm/census.hpp"
#include "sgm/ensemble.hpp"
#include "sgm/moments.hpp"

using namespace sgm;

namespace {

void SampleDependent(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const std::int64_t E = edge_budget(n, Rational(3, 10));
    std::uint64_t replica = 0;
    for (auto _ : state) {
        auto g = sample_dependent(n, E, SeedStream{11, replica++});
        benchmark::DoNotOptimize(g.edges.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(SampleDependent)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void SampleIndependent(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t replica = 0;
    for (auto _ : state) {
        auto g = sample_independent(n, Rational(3, 10), SeedStream{12, replica++});
        benchmark::DoNotOptimize(g.edges.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(SampleIndependent)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void SampleBlockDependent(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    EnsembleSpec spec;
    spec.kind = EnsembleKind::block_dependent;
    spec.sizes = {n, n};
    auto within = edge_budget(n, Rational(1, 4));
    auto cross = (2 * static_cast<std::int64_t>(n) * n) / 5;
    spec.E_matrix = {{within, cross}, {cross, within}};
    std::uint64_t replica = 0;
    for (auto _ : state) {
        auto g = sample_block(spec, SeedStream{13, replica++});
        benchmark::DoNotOptimize(g.edges.data());
    }
}
BENCHMARK(SampleBlockDependent)->RangeMultiplier(2)->Range(16, 128);

void OverlapTableTriangle(benchmark::State& state) {
    Motif triangle = make_builtin(BuiltinMotif::triangle);
    const long n = state.range(0);
    for (auto _ : state) {
        auto table = overlap_table(triangle, n);
        benchmark::DoNotOptimize(table.counts.data());
    }
}
BENCHMARK(OverlapTableTriangle)->Arg(16)->Arg(32)->Arg(64);

void DependentVarianceExact(benchmark::State& state) {
    Motif triangle = make_builtin(BuiltinMotif::triangle);
    const long n = state.range(0);
    const std::int64_t E = edge_budget(static_cast<int>(n), Rational(3, 10));
    for (auto _ : state) {
        auto v = variance_dependent_exact(triangle, n, E);
        benchmark::DoNotOptimize(&v);
    }
}
BENCHMARK(DependentVarianceExact)->Arg(16)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
