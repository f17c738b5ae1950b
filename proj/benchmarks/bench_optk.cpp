#include <benchmark/benchmark.h>

#include "kevac/generate.hpp"
#include "kevac/optk.hpp"

namespace {

kevac::PathInstance make(int n) {
    kevac::GenOptions g;
    g.n = n;
    g.coord_max = 10 * (static_cast<kevac::Coord>(n) + 1);
    g.w_max = 20;
    g.capacity = 3;
    g.seed = 1;
    return kevac::generate_instance(g);
}

void BM_OptimalKSink(benchmark::State& state) {
    const auto inst = make(static_cast<int>(state.range(0)));
    const int k = static_cast<int>(state.range(1));
    const auto s = kevac::all_plus(inst);
    std::uint64_t increments = 0;
    for (auto _ : state) {
        const auto res = kevac::optimal_k_sink(inst, s, k, kevac::CostModel::Discrete);
        increments = 0;
        for (auto v : res.stats.j_increments) increments += v;
        benchmark::DoNotOptimize(res.time);
    }
    state.counters["j_increments"] = static_cast<double>(increments);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OptimalKSink)
    ->ArgsProduct({{1000, 10000, 100000}, {2, 10}})
    ->Unit(benchmark::kMillisecond);

void BM_OptimalKSinkValue(benchmark::State& state) {
    const auto inst = make(static_cast<int>(state.range(0)));
    const auto s = kevac::all_plus(inst);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            kevac::optimal_k_sink_value(inst, s.weights, 10, kevac::CostModel::Discrete));
}
BENCHMARK(BM_OptimalKSinkValue)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace
