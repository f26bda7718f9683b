// Serial reference vs OpenMP kernels: sampler trials and exact row reduction.

#include "charclass/linalg.hpp"
#include "charclass/sampler.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace charclass;

namespace {

const ExampleMap& sampler_map() {
    static const ExampleMap map = ExampleMap::direct_sum({ExampleMap::vandermonde(6), ExampleMap::sphere_one_i(4)});
    return map;
}

void BM_SamplerSerial(benchmark::State& state) {
    for (auto _ : state) {
        auto r = sample_check_regular_serial(sampler_map(), {6, 3}, static_cast<std::uint64_t>(state.range(0)), 1);
        benchmark::DoNotOptimize(r.violations);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SamplerParallel(benchmark::State& state) {
    for (auto _ : state) {
        auto r = sample_check_regular_parallel(sampler_map(), {6, 3}, static_cast<std::uint64_t>(state.range(0)), 1);
        benchmark::DoNotOptimize(r.violations);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

std::vector<Row> random_matrix(std::size_t n) {
    std::mt19937_64 rng(n);
    std::uniform_int_distribution<int> d(-9, 9);
    std::vector<Row> rows(n, Row(n));
    for (auto& r : rows)
        for (auto& x : r) x = d(rng);
    return rows;
}

void BM_RowReduceSerial(benchmark::State& state) {
    const auto m = random_matrix(static_cast<std::size_t>(state.range(0)));
    const Domain p = Domain::prime(1000003);
    for (auto _ : state) benchmark::DoNotOptimize(row_reduce_serial(m, m.size(), p).rank());
}

void BM_RowReduceParallel(benchmark::State& state) {
    const auto m = random_matrix(static_cast<std::size_t>(state.range(0)));
    const Domain p = Domain::prime(1000003);
    for (auto _ : state) benchmark::DoNotOptimize(row_reduce_parallel(m, m.size(), p).rank());
}

}  // namespace

BENCHMARK(BM_SamplerSerial)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SamplerParallel)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RowReduceSerial)->Arg(64)->Arg(160)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RowReduceParallel)->Arg(64)->Arg(160)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
