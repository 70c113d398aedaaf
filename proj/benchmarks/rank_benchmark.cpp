#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "sonik/core.hpp"
#include "sonik/oracle.hpp"
#include "sonik/transform.hpp"

namespace {

sonik::element_list draw(std::int64_t n, std::int64_t bits) {
    std::uint64_t state = 0x5eed;
    const auto next = [&state]() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;

    sonik::element_list values;
    values.reserve(n);
    for (std::int64_t i = 0; i < n; ++i) {
        values.push_back(static_cast<sonik::value_t>(next() & mask));
    }
    return values;
}

}  // namespace

static void BM_ComputeRanks(benchmark::State& state) {
    const auto values = draw(state.range(0), state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sonik::compute_ranks(values));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ComputeRanks)
    ->Args({1 << 10, 8})
    ->Args({1 << 14, 16})
    ->Args({1 << 17, 16})
    ->Args({1 << 17, 32})
    ->Args({1 << 18, 20});

static void BM_SortBaseline(benchmark::State& state) {
    const auto values = draw(state.range(0), state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sonik::oracle::dense_ranks(values));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SortBaseline)
    ->Args({1 << 10, 8})
    ->Args({1 << 14, 16})
    ->Args({1 << 17, 16})
    ->Args({1 << 17, 32})
    ->Args({1 << 18, 20});

static void BM_StabilizeRanks(benchmark::State& state) {
    const auto values = draw(state.range(0), 8);  // duplicate-heavy
    const auto dense = sonik::compute_ranks(values);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sonik::stabilize_ranks(values, dense));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_StabilizeRanks)->Arg(1 << 14)->Arg(1 << 17);

static void BM_SortedFromRanks(benchmark::State& state) {
    const auto values = draw(state.range(0), 16);
    const auto dense = sonik::compute_ranks(values);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sonik::sorted_from_ranks(values, dense));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SortedFromRanks)->Arg(1 << 14)->Arg(1 << 17);

BENCHMARK_MAIN();
