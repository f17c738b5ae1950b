#include <benchmark/benchmark.h>

#include <vector>

#include "kevac/biheap.hpp"
#include "kevac/generate.hpp"

namespace {

// Mixed stream: inserts, bulk AddW/AddL and deletes of random live pairs.
void BM_BiHeapMixed(benchmark::State& state) {
    const auto capacity = static_cast<std::int64_t>(state.range(0));
    const auto ops = static_cast<std::size_t>(state.range(1));
    std::uint64_t touches = 0;
    for (auto _ : state) {
        kevac::Rng rng(42);
        kevac::BiHeap h(capacity);
        std::vector<kevac::BiHeap::Handle> live;
        for (std::size_t i = 0; i < ops; ++i) {
            const auto kind = rng.uniform(0, 3);
            if (kind == 0 || live.empty()) {
                live.push_back(h.insert(rng.uniform(0, 1000), rng.uniform(0, 1000)));
            } else if (kind == 1) {
                h.add_w(rng.uniform(-20, 20));
            } else if (kind == 2) {
                h.add_l(rng.uniform(-5, 5));
            } else {
                const auto at = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(live.size()) - 1));
                h.erase(live[at]);
                live[at] = live.back();
                live.pop_back();
            }
            benchmark::DoNotOptimize(h.max());
        }
        touches = h.node_touches();
    }
    state.counters["node_touches"] = static_cast<double>(touches);
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * ops));
}
BENCHMARK(BM_BiHeapMixed)->ArgsProduct({{1, 16, 1024}, {10000, 100000}});

// One AddW against many residue classes.
void BM_BiHeapAddW(benchmark::State& state) {
    const auto capacity = static_cast<std::int64_t>(state.range(0));
    kevac::BiHeap h(capacity);
    for (std::int64_t w = 0; w < capacity; ++w) h.insert(w, 0);
    std::int64_t step = 1;
    for (auto _ : state) {
        h.add_w(step);
        step = step % 97 + 1;
        benchmark::DoNotOptimize(h.max());
    }
}
BENCHMARK(BM_BiHeapAddW)->RangeMultiplier(8)->Range(8, 32768);

}  // namespace
