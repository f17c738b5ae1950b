#include "kevac/minmax.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <string>

#include "kevac/evac.hpp"
#include "kevac/scenario_gen.hpp"
#include "kevac/unimodal.hpp"

namespace kevac {

namespace {

void check_k(const PathInstance& inst, int k) {
    if (k < 1 || k > inst.n() + 1)
        throw InvalidInput("k = " + std::to_string(k) + " outside [1, " +
                           std::to_string(inst.n() + 1) + "]");
}

Plan plan_from_left_ends(const std::vector<int>& left_ends, const std::vector<int>& sinks, int n) {
    std::vector<Part> parts;
    for (std::size_t d = 0; d < left_ends.size(); ++d) {
        const int r = d + 1 < left_ends.size() ? left_ends[d + 1] - 1 : n;
        parts.push_back(Part{left_ends[d], r, sinks[d]});
    }
    return Plan(std::move(parts), n);
}

}  // namespace

MmrDpTable fill_mmr_table(const RjiMatrix& rji, int k, MmrStats* stats) {
    const int n = rji.n();
    if (k < 1 || k > n + 1)
        throw InvalidInput("k = " + std::to_string(k) + " outside [1, " + std::to_string(n + 1) + "]");
    MmrDpTable t;
    t.k = k;
    t.n = n;
    t.values.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(n + 1), 0);
    t.arg_j.assign(t.values.size(), 0);
    if (stats) {
        stats->j_increments.assign(k, 0);
        stats->j_probes.assign(k, 0);
    }

    for (int i = 0; i <= n; ++i) t.values[t.index(1, i)] = rji.R(0, i);
    for (int q = 2; q <= k; ++q) {
        // Cells with fewer vertices than parts leave the trailing parts unused.
        for (int i = 0; i < q - 1; ++i) {
            t.values[t.index(q, i)] = t.M(q - 1, i);
            t.arg_j[t.index(q, i)] = t.J(q - 1, i);
        }
        // M(q-1, j-1) is non-decreasing and R(j, i) non-increasing in j, so the cost
        // is unimodal in j and its largest minimizer only moves right as i grows.
        std::uint64_t increments = 0;
        std::uint64_t probes = 0;
        int j = q - 1;
        for (int i = q - 1; i <= n; ++i) {
            Time g = std::max(t.M(q - 1, j - 1), rji.R(j, i));
            while (j < i) {
                ++probes;
                const Time next = std::max(t.M(q - 1, j), rji.R(j + 1, i));
                if (next > g) break;
                ++j;
                ++increments;
                g = next;
            }
            t.values[t.index(q, i)] = g;
            t.arg_j[t.index(q, i)] = j;
        }
        if (stats) {
            stats->j_increments[q - 1] = increments;
            stats->j_probes[q - 1] = probes;
        }
    }
    return t;
}

MmrResult minmax_regret_dp(const PathInstance& inst, int k, const RjiMatrix& rji) {
    check_k(inst, k);
    if (rji.n() != inst.n()) throw InvalidInput("R(j,i) matrix size does not match the instance");
    MmrResult res;
    const MmrDpTable t = fill_mmr_table(rji, k, &res.stats);
    res.value = t.M(k, t.n);

    std::vector<Part> parts;
    int i = t.n;
    for (int q = k; q >= 1; --q) {
        const int j = q == 1 ? 0 : t.J(q, i);
        parts.push_back(Part{j, i, rji.sink(j, i)});
        i = j - 1;
    }
    std::reverse(parts.begin(), parts.end());
    res.plan = Plan(std::move(parts), t.n);
    res.stats.rji_sink_evaluations = rji.sink_evaluations;
    return res;
}

MmrResult minmax_regret_dp(const PathInstance& inst, int k) {
    check_k(inst, k);
    const auto start = std::chrono::steady_clock::now();
    ScenarioOptCache cache(inst, k, CostModel::Simplified);
    cache.fill_all();
    const EvacLookupTables tables = EvacLookupTables::build(inst);
    const RjiMatrix rji = compute_rji(inst, cache, tables);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    MmrResult res = minmax_regret_dp(inst, k, rji);
    res.stats.opt_computations = cache.computed();
    res.stats.precompute_ms = ms;
    return res;
}

Time placement_minmax_regret(const PathInstance& inst, const std::vector<int>& left_ends,
                             ScenarioOptCache& cache, std::vector<int>* sinks) {
    const int n = inst.n();
    if (left_ends.empty() || left_ends.front() != 0)
        throw InvalidInput("placement must start at vertex 0");
    for (std::size_t d = 1; d < left_ends.size(); ++d)
        if (left_ends[d] <= left_ends[d - 1] || left_ends[d] > n)
            throw InvalidInput("placement left ends must be strictly increasing within [0, n]");
    if (sinks) sinks->assign(left_ends.size(), 0);

    Time worst = std::numeric_limits<Time>::min();
    for (std::size_t d = 0; d < left_ends.size(); ++d) {
        const int l = left_ends[d];
        const int r = d + 1 < left_ends.size() ? left_ends[d + 1] - 1 : n;
        std::vector<Time> per_sink(r - l + 1, std::numeric_limits<Time>::min());
        for (const ScenarioDescriptor& c : part_candidates(l, r)) {
            const Time opt = cache.get(c);
            const Scenario s = realize_scenario(inst, c);
            const std::vector<Time> times = eval_all_sinks(inst, s, l, r, CostModel::Simplified);
            for (std::size_t y = 0; y < times.size(); ++y)
                per_sink[y] = std::max(per_sink[y], times[y] - opt);
        }
        const auto best = std::min_element(per_sink.begin(), per_sink.end());
        if (sinks) (*sinks)[d] = l + static_cast<int>(best - per_sink.begin());
        worst = std::max(worst, *best);
    }
    return worst;
}

MmrResult minmax_regret_bs(const PathInstance& inst, int k) {
    require_valid(inst);
    check_k(inst, k);
    const int n = inst.n();
    ScenarioOptCache cache(inst, k, CostModel::Simplified);
    MmrResult res;

    std::vector<int> left_ends(k, 0);
    struct Best {
        Time value;
        std::vector<int> left_ends;
    };

    // Level i (1-based part index, i >= 2) picks the left end of part i with parts
    // i+1..k fixed; each candidate value is the best over the inner levels.
    auto solve = [&](auto&& self, int level) -> Best {
        if (level < 2) {
            ++res.stats.placements;
            return Best{placement_minmax_regret(inst, left_ends, cache), left_ends};
        }
        const int lo = level - 1;
        const int hi = level == k ? n : left_ends[level] - 1;
        std::map<int, Best> inner;
        const UnimodalMin m = minimize_unimodal(lo, hi, [&](int v) {
            left_ends[level - 1] = v;
            Best b = self(self, level - 1);
            const Time value = b.value;
            inner.emplace(v, std::move(b));
            return value;
        });
        return inner.at(m.arg);
    };

    const Best best = solve(solve, k);
    std::vector<int> sinks;
    res.value = placement_minmax_regret(inst, best.left_ends, cache, &sinks);
    res.plan = plan_from_left_ends(best.left_ends, sinks, n);
    res.stats.opt_computations = cache.computed();
    return res;
}

}  // namespace kevac
