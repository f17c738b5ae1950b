#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kevac/biheap.hpp"
#include "kevac/model.hpp"

namespace kevac {

struct OneSinkResult {
    Time time = 0;
    int sink = 0;
};

/// Best single sink for [lo, hi]; leftmost sink on ties.
OneSinkResult optimal_one_sink(const PathInstance& inst, const Scenario& s, int lo, int hi,
                               CostModel cm);
OneSinkResult optimal_one_sink(const PathInstance& inst, std::span<const Weight> weights, int lo,
                               int hi, CostModel cm);

/// Optimal one-sink time of a window [lo, hi] that grows to the right and shrinks
/// from the left. Two Bi-Heaps hold the evacuation terms of the vertices left and
/// right of the current sink; the sink only ever moves right.
class SlidingOneSink {
public:
    SlidingOneSink(const PathInstance& inst, std::span<const Weight> weights, CostModel cm);

    /// Appends vertex v; v must be hi() + 1 unless the window is empty.
    void push_right(int v);
    /// Drops vertex lo(). The window must be non-empty.
    void pop_left();
    void reset();

    bool empty() const { return lo_ > hi_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }

    /// Optimal one-sink evacuation time of the window (0 when empty).
    Time value() const;
    /// An optimal sink (the left one of the two candidates on ties).
    int sink() const;

    std::uint64_t node_touches() const { return left_.node_touches() + right_.node_touches(); }
    std::uint64_t sink_moves() const { return sink_moves_; }

private:
    Weight range_weight(int a, int b) const { return prefix_[b + 1] - prefix_[a]; }
    Time travel(int a, int b) const { return (coords_[b] - coords_[a]) * tau_; }
    Time heap_time(const BiHeap& h) const;
    Time left_time() const { return heap_time(left_); }
    Time right_time() const { return heap_time(right_); }
    Time right_time_from_prev() const;
    void move_sink_right();
    void rebalance();

    std::span<const Coord> coords_;
    std::int64_t capacity_;
    std::int64_t tau_;
    CostModel cm_;
    std::vector<Weight> prefix_;
    BiHeap left_;
    BiHeap right_;
    std::vector<BiHeap::Handle> left_handle_;
    std::vector<BiHeap::Handle> right_handle_;
    int lo_ = 0;
    int hi_ = -1;
    int sink_ = 0;
    std::uint64_t sink_moves_ = 0;
};

struct OptStats {
    /// Per DP row: left-end advances and comparisons made while scanning.
    std::vector<std::uint64_t> j_increments;
    std::vector<std::uint64_t> j_probes;
    std::uint64_t heap_node_touches = 0;
    std::uint64_t sink_moves = 0;
};

/// T(q, i): optimal q-sink time of [0, i]; arg_j(q, i): largest optimal left end
/// of the last part; arg_sink(q, i): an optimal sink for that part.
/// Cells with i + 1 < q hold 0 (at most i + 1 non-empty parts exist).
struct OptDpTable {
    int k = 0;
    int n = 0;
    std::vector<Time> values;
    std::vector<int> arg_j;
    std::vector<int> arg_sink;

    std::size_t index(int q, int i) const {
        return static_cast<std::size_t>(q - 1) * static_cast<std::size_t>(n + 1) +
               static_cast<std::size_t>(i);
    }
    Time T(int q, int i) const { return values[index(q, i)]; }
    int J(int q, int i) const { return arg_j[index(q, i)]; }
    int sink(int q, int i) const { return arg_sink[index(q, i)]; }
};

OptDpTable fill_opt_table(const PathInstance& inst, std::span<const Weight> weights, int k,
                          CostModel cm, OptStats* stats = nullptr);

/// Value-only variant keeping two rows; same scan as fill_opt_table.
Time optimal_k_sink_value(const PathInstance& inst, std::span<const Weight> weights, int k,
                          CostModel cm);

struct OptKSinkResult {
    Time time = 0;
    Plan plan;
    OptStats stats;
};

/// Throws InvalidInput unless 1 <= k <= n + 1.
OptKSinkResult optimal_k_sink(const PathInstance& inst, const Scenario& s, int k, CostModel cm);
OptKSinkResult optimal_k_sink(const PathInstance& inst, std::span<const Weight> weights, int k,
                              CostModel cm);

}  // namespace kevac
