#include <benchmark/benchmark.h>

#include "kevac/generate.hpp"
#include "kevac/minmax.hpp"
#include "kevac/regret.hpp"

namespace {

kevac::PathInstance make(int n) {
    kevac::GenOptions g;
    g.n = n;
    g.coord_max = 10 * (static_cast<kevac::Coord>(n) + 1);
    g.w_max = 20;
    g.seed = 2;
    return kevac::generate_instance(g);
}

void BM_ScenarioOptSweep(benchmark::State& state) {
    const auto inst = make(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        kevac::ScenarioOptCache cache(inst, 3);
        cache.fill_all();
        benchmark::DoNotOptimize(cache.computed());
    }
}
BENCHMARK(BM_ScenarioOptSweep)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_LookupTables(benchmark::State& state) {
    const auto inst = make(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kevac::EvacLookupTables::build(inst).entries());
}
BENCHMARK(BM_LookupTables)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_ComputeRji(benchmark::State& state) {
    const auto inst = make(static_cast<int>(state.range(0)));
    kevac::ScenarioOptCache cache(inst, 3);
    cache.fill_all();
    const auto tables = kevac::EvacLookupTables::build(inst);
    for (auto _ : state) benchmark::DoNotOptimize(kevac::compute_rji(inst, cache, tables).R(0, inst.n()));
}
BENCHMARK(BM_ComputeRji)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_MinmaxDp(benchmark::State& state) {
    const auto inst = make(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kevac::minmax_regret_dp(inst, 3).value);
}
BENCHMARK(BM_MinmaxDp)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_MinmaxBinarySearch(benchmark::State& state) {
    const auto inst = make(static_cast<int>(state.range(0)));
    std::uint64_t placements = 0;
    for (auto _ : state) {
        const auto res = kevac::minmax_regret_bs(inst, 2);
        placements = res.stats.placements;
        benchmark::DoNotOptimize(res.value);
    }
    state.counters["placements"] = static_cast<double>(placements);
}
BENCHMARK(BM_MinmaxBinarySearch)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace
