#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kevac/model.hpp"

namespace kevac {

/// Exhaustive references. They use only the model types and the direct
/// evacuation formulas, never the optimized modules.

struct BruteResult {
    Time value = 0;
    Plan plan;
};

/// Every composition into k parts, every sink per part. Requires n <= 12, k <= 4.
BruteResult brute_optimal_k_sink(const PathInstance& inst, const Scenario& s, int k, CostModel cm);

struct BruteMinmaxResult {
    Time value = 0;
    Plan plan;
    /// Plans whose max regret over the structured candidates differs from the max
    /// over all corner scenarios (expected 0).
    std::size_t structured_mismatches = 0;
    std::size_t plans = 0;
    std::size_t corners = 0;
};

/// Every plan against every corner scenario (each vertex at w- or w+; degenerate
/// vertices contribute a single choice). Simplified model. Requires n <= 8, k <= 3.
BruteMinmaxResult brute_minmax_regret(const PathInstance& inst, int k);

/// Max regret of one plan over all corner scenarios. Requires n <= 10.
Time brute_max_regret_corners(const PathInstance& inst, const Plan& plan);

/// Max regret of one plan over its per-part step candidates, each evaluated
/// directly.
Time brute_max_regret_structured(const PathInstance& inst, const Plan& plan);

struct BruteRji {
    int n = -1;
    /// R(j, i) at j * (n + 1) + i.
    std::vector<Time> values;
    /// Max regret of each sink t in [j, i] at the same index, entry t - j.
    std::vector<std::vector<Time>> sink_regret;

    Time R(int j, int i) const { return values[static_cast<std::size_t>(j) * (n + 1) + i]; }
    const std::vector<Time>& per_sink(int j, int i) const {
        return sink_regret[static_cast<std::size_t>(j) * (n + 1) + i];
    }
};

/// All sinks against all full-path step scenarios, direct evaluation, optimal
/// times from brute_optimal_k_sink. Simplified model. Requires n <= 10, k <= 4.
BruteRji brute_rji(const PathInstance& inst, int k);

/// Operation on a Bi-Heap: Delete refers to the `target`-th Insert of the sequence.
struct BiHeapOp {
    enum class Kind { AddW, AddL, Insert, Delete };
    Kind kind = Kind::Insert;
    std::int64_t w = 0;
    std::int64_t l = 0;
    std::size_t target = 0;
};

/// Explicit pair list with eager offsets and a full scan for the maximum; returns
/// the maximum cost after every operation (absent when empty). Deleting a pair
/// twice or a pair not yet inserted throws InvalidInput.
std::vector<std::optional<Time>> naive_biheap_mirror(std::int64_t capacity,
                                                     const std::vector<BiHeapOp>& ops);

/// Random valid sequence (deletes only target live pairs).
std::vector<BiHeapOp> random_biheap_ops(std::uint64_t seed, std::size_t count,
                                        std::int64_t value_range = 50);

}  // namespace kevac
