#include <benchmark/benchmark.h>

#include "slweyl/cvmod.hpp"
#include "slweyl/weylchar.hpp"

namespace {

void BM_qbinom(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(slweyl::qbinom(n, n / 2));
    }
}
BENCHMARK(BM_qbinom)->Arg(10)->Arg(20)->Arg(40);

void BM_character_closed(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(slweyl::character_closed(n));
    }
}
BENCHMARK(BM_character_closed)->DenseRange(2, 10, 2);

void BM_character_from_tuples(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(slweyl::character_from_tuples(n));
    }
}
BENCHMARK(BM_character_from_tuples)->DenseRange(2, 8, 2);

void BM_character_from_superpops(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(slweyl::character_from_superpops(n));
    }
}
BENCHMARK(BM_character_from_superpops)->DenseRange(2, 8, 2);

void BM_enumerate_superpops(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(slweyl::enumerate_superpops(n));
    }
    state.SetItemsProcessed(state.iterations() * (1LL << (2 * n)));
}
BENCHMARK(BM_enumerate_superpops)->DenseRange(2, 8, 2);

void BM_bijection_roundtrip(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto superpops = slweyl::enumerate_superpops(n);
    for (auto _ : state) {
        for (const slweyl::SuperPop& sp : superpops) {
            benchmark::DoNotOptimize(slweyl::tuple_to_superpop(slweyl::superpop_to_tuple(sp)));
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(superpops.size()));
}
BENCHMARK(BM_bijection_roundtrip)->Arg(6);

void BM_filtration_sweep(benchmark::State& state) {
    int size = static_cast<int>(state.range(0));
    int parts = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(slweyl::verify_filtration_sweep(size, parts));
    }
}
BENCHMARK(BM_filtration_sweep)->Args({12, 5})->Args({20, 6})->Args({30, 8});

}  // namespace

BENCHMARK_MAIN();
