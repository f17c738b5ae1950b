#include "kevac/evac.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

namespace kevac {

namespace {

void check_range(const PathInstance& inst, std::size_t num_weights, int lo, int hi) {
    if (lo < 0 || hi > inst.n() || lo > hi)
        throw InvalidInput("subpath [" + std::to_string(lo) + "," + std::to_string(hi) +
                           "] outside path [0," + std::to_string(inst.n()) + "]");
    if (num_weights != inst.coords.size())
        throw InvalidInput("scenario has " + std::to_string(num_weights) + " weights, path has " +
                           std::to_string(inst.coords.size()) + " vertices");
}

void check_sink(const PathInstance& inst, std::size_t num_weights, int lo, int hi, int sink) {
    check_range(inst, num_weights, lo, hi);
    if (sink < lo || sink > hi)
        throw InvalidInput("sink " + std::to_string(sink) + " outside subpath [" +
                           std::to_string(lo) + "," + std::to_string(hi) + "]");
}

}  // namespace

EvacSideResult eval_side(const PathInstance& inst, const Scenario& s, int lo, int hi, int sink,
                         Side side, CostModel cm) {
    check_sink(inst, s.weights.size(), lo, hi, sink);
    EvacSideResult res;
    Weight cumulative = 0;
    if (side == Side::Left) {
        for (int i = lo; i < sink; ++i) {
            cumulative += s.weights[i];
            const Time v = evac_term(cumulative, (inst.coords[sink] - inst.coords[i]) * inst.tau,
                                     inst.capacity, cm);
            if (!res.argmax_index || v > res.time) {
                res.time = v;
                res.argmax_index = i;
            }
        }
    } else {
        for (int i = hi; i > sink; --i) {
            cumulative += s.weights[i];
            const Time v = evac_term(cumulative, (inst.coords[i] - inst.coords[sink]) * inst.tau,
                                     inst.capacity, cm);
            if (!res.argmax_index || v > res.time) {
                res.time = v;
                res.argmax_index = i;
            }
        }
    }
    return res;
}

Time eval_one_sink(const PathInstance& inst, const Scenario& s, int lo, int hi, int sink,
                   CostModel cm) {
    return std::max(eval_side(inst, s, lo, hi, sink, Side::Left, cm).time,
                    eval_side(inst, s, lo, hi, sink, Side::Right, cm).time);
}

PlanEvaluation eval_plan(const PathInstance& inst, const Scenario& s, const Plan& plan,
                         CostModel cm) {
    if (plan.n() != inst.n())
        throw InvalidInput("plan covers [0," + std::to_string(plan.n()) + "], path is [0," +
                           std::to_string(inst.n()) + "]");
    PlanEvaluation out;
    for (int p = 0; p < plan.k(); ++p) {
        const Part& part = plan.parts()[p];
        const Time t = eval_one_sink(inst, s, part.l, part.r, part.sink, cm);
        if (p == 0 || t > out.time) {
            out.time = t;
            out.dominant_part = p;
        }
    }
    return out;
}

std::vector<Time> eval_all_sinks(const PathInstance& inst, const Scenario& s, int lo, int hi,
                                 CostModel cm) {
    return eval_all_sinks(inst, std::span<const Weight>(s.weights), lo, hi, cm);
}

std::vector<Time> eval_all_sinks(const PathInstance& inst, std::span<const Weight> weights, int lo,
                                 int hi, CostModel cm) {
    check_range(inst, weights.size(), lo, hi);
    const int len = hi - lo + 1;
    std::vector<Time> out(len, 0);

    // Left pass: out[t] holds the left evacuation time of sink t.
    Time left = 0;
    Weight prefix = 0;
    for (int t = lo + 1; t <= hi; ++t) {
        const Time step = (inst.coords[t] - inst.coords[t - 1]) * inst.tau;
        prefix += weights[t - 1];
        const Time old_sink_term = evac_term(prefix, step, inst.capacity, cm);
        left = (t - 1 > lo) ? std::max(left + step, old_sink_term) : old_sink_term;
        out[t - lo] = left;
    }

    Time right = 0;
    Weight suffix = 0;
    for (int t = hi - 1; t >= lo; --t) {
        const Time step = (inst.coords[t + 1] - inst.coords[t]) * inst.tau;
        suffix += weights[t + 1];
        const Time old_sink_term = evac_term(suffix, step, inst.capacity, cm);
        right = (t + 1 < hi) ? std::max(right + step, old_sink_term) : old_sink_term;
        out[t - lo] = std::max(out[t - lo], right);
    }
    return out;
}

namespace {

struct Batch {
    Time time;
    Weight count;
};

// Releases arrivals (sorted by time) through one vertex at `capacity` per time
// step, returning the departure schedule.
std::vector<Batch> dispatch(const std::vector<Batch>& arrivals, std::int64_t capacity) {
    std::vector<Batch> departures;
    std::size_t next = 0;
    Weight waiting = 0;
    Time now = arrivals.empty() ? 0 : arrivals.front().time;
    while (true) {
        while (next < arrivals.size() && arrivals[next].time <= now) waiting += arrivals[next++].count;
        if (waiting == 0) {
            if (next == arrivals.size()) break;
            now = arrivals[next].time;
            continue;
        }
        const Weight sent = std::min(capacity, waiting);
        departures.push_back(Batch{now, sent});
        waiting -= sent;
        ++now;
    }
    return departures;
}

// Moves evacuees from `from` towards the sink one vertex at a time; `step` is
// +1 (left side) or -1 (right side).
Time simulate_side(const PathInstance& inst, const Scenario& s, int from, int sink, int step) {
    std::vector<Batch> incoming;
    for (int v = from; v != sink; v += step) {
        std::vector<Batch> arrivals = std::move(incoming);
        if (s.weights[v] > 0) {
            arrivals.insert(arrivals.begin(), Batch{0, s.weights[v]});
            std::stable_sort(arrivals.begin(), arrivals.end(),
                             [](const Batch& a, const Batch& b) { return a.time < b.time; });
        }
        const Time travel = std::abs(inst.coords[v + step] - inst.coords[v]) * inst.tau;
        incoming.clear();
        for (const Batch& b : dispatch(arrivals, inst.capacity))
            incoming.push_back(Batch{b.time + travel, b.count});
    }
    Time last = 0;
    for (const Batch& b : incoming) last = std::max(last, b.time);
    return last;
}

}  // namespace

Time simulate_evacuation(const PathInstance& inst, const Scenario& s, int lo, int hi, int sink) {
    check_sink(inst, s.weights.size(), lo, hi, sink);
    const Time left = sink > lo ? simulate_side(inst, s, lo, sink, +1) : 0;
    const Time right = sink < hi ? simulate_side(inst, s, hi, sink, -1) : 0;
    return std::max(left, right);
}

}  // namespace kevac
