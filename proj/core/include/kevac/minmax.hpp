#pragma once

#include <cstdint>
#include <vector>

#include "kevac/model.hpp"
#include "kevac/regret.hpp"

namespace kevac {

struct MmrStats {
    /// Per DP row: left-end advances and comparisons.
    std::vector<std::uint64_t> j_increments;
    std::vector<std::uint64_t> j_probes;
    /// Distinct optimal-time computations (one per scenario descriptor class).
    std::uint64_t opt_computations = 0;
    std::uint64_t rji_sink_evaluations = 0;
    /// Binary-search solver: full placements evaluated.
    std::uint64_t placements = 0;
    double precompute_ms = 0;
};

/// M(q, i): minimax regret of [0, i] split into q parts with the q-th part ending
/// at i; arg_j(q, i): largest minimizing left end of that part.
struct MmrDpTable {
    int k = 0;
    int n = 0;
    std::vector<Time> values;
    std::vector<int> arg_j;

    std::size_t index(int q, int i) const {
        return static_cast<std::size_t>(q - 1) * static_cast<std::size_t>(n + 1) +
               static_cast<std::size_t>(i);
    }
    Time M(int q, int i) const { return values[index(q, i)]; }
    int J(int q, int i) const { return arg_j[index(q, i)]; }
};

MmrDpTable fill_mmr_table(const RjiMatrix& rji, int k, MmrStats* stats = nullptr);

struct MmrResult {
    Time value = 0;
    Plan plan;
    MmrStats stats;
};

/// Full pipeline: optimal times for every step scenario, lookup tables, R(j, i),
/// then the DP. Simplified cost model throughout.
MmrResult minmax_regret_dp(const PathInstance& inst, int k);

/// DP over a precomputed matrix (e.g. loaded from disk).
MmrResult minmax_regret_dp(const PathInstance& inst, int k, const RjiMatrix& rji);

/// Minimax regret of a fixed placement of part left ends (left_ends[0] == 0,
/// strictly increasing): per part, the best sink against the part's structured
/// candidates, then the max over parts. Optionally reports each part's sink
/// (leftmost optimal).
Time placement_minmax_regret(const PathInstance& inst, const std::vector<int>& left_ends,
                             ScenarioOptCache& cache, std::vector<int>* sinks = nullptr);

/// Nested unimodal search over the left ends of parts k, k-1, ..., 2.
MmrResult minmax_regret_bs(const PathInstance& inst, int k);

}  // namespace kevac
