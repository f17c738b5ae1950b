#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kevac/model.hpp"

namespace kevac {

enum class Side { Left, Right };

struct EvacSideResult {
    Time time = 0;
    /// Vertex attaining the maximum evacuation-function value. Leftmost for the
    /// left side, rightmost for the right side. Absent when the side is empty.
    std::optional<int> argmax_index;
};

/// Evacuation-function value of a group of `cumulative` evacuees starting
/// `travel` time units away from the sink.
///   Discrete:   travel + ceil(cumulative / capacity) - 1
///   Simplified: travel + cumulative
inline Time evac_term(Weight cumulative, Time travel, std::int64_t capacity, CostModel cm) {
    if (cm == CostModel::Simplified) return travel + cumulative;
    return travel + (cumulative + capacity - 1) / capacity - 1;
}

/// Max over the vertices of [lo, hi] strictly on `side` of `sink`. Sums run from
/// the subpath end, not the path end.
EvacSideResult eval_side(const PathInstance& inst, const Scenario& s, int lo, int hi, int sink,
                         Side side, CostModel cm);

/// Max of both sides.
Time eval_one_sink(const PathInstance& inst, const Scenario& s, int lo, int hi, int sink,
                   CostModel cm);

struct PlanEvaluation {
    Time time = 0;
    int dominant_part = 0;  ///< smallest part index attaining `time`
};

PlanEvaluation eval_plan(const PathInstance& inst, const Scenario& s, const Plan& plan,
                         CostModel cm);

/// One-sink times for every sink in [lo, hi] (entry t - lo for sink t), with O(1)
/// work per sink: moving the sink one step right only adds the old sink as a new
/// left-side candidate, so the previous argmax or the old sink is the new argmax.
std::vector<Time> eval_all_sinks(const PathInstance& inst, const Scenario& s, int lo, int hi,
                                 CostModel cm);

/// Same as above for a raw weight vector (indexed by vertex).
std::vector<Time> eval_all_sinks(const PathInstance& inst, std::span<const Weight> weights, int lo,
                                 int hi, CostModel cm);

/// Discrete-event simulation of the discrete evacuation of [lo, hi] into `sink`:
/// every vertex releases up to `capacity` waiting evacuees per integer time step
/// towards the sink; a released group reaches the next vertex after
/// (edge length) * tau. Returns the arrival time of the last evacuee.
Time simulate_evacuation(const PathInstance& inst, const Scenario& s, int lo, int hi, int sink);

}  // namespace kevac
