#include "kevac/optk.hpp"

#include <algorithm>
#include <string>

#include "kevac/evac.hpp"

namespace kevac {

OneSinkResult optimal_one_sink(const PathInstance& inst, const Scenario& s, int lo, int hi,
                               CostModel cm) {
    return optimal_one_sink(inst, std::span<const Weight>(s.weights), lo, hi, cm);
}

OneSinkResult optimal_one_sink(const PathInstance& inst, std::span<const Weight> weights, int lo,
                               int hi, CostModel cm) {
    const std::vector<Time> times = eval_all_sinks(inst, weights, lo, hi, cm);
    const auto best = std::min_element(times.begin(), times.end());
    return OneSinkResult{*best, lo + static_cast<int>(best - times.begin())};
}

// ---- SlidingOneSink ----

SlidingOneSink::SlidingOneSink(const PathInstance& inst, std::span<const Weight> weights,
                               CostModel cm)
    : coords_(inst.coords),
      capacity_(cm == CostModel::Discrete ? inst.capacity : 1),
      tau_(inst.tau),
      cm_(cm),
      prefix_(weights.size() + 1, 0),
      left_(capacity_),
      right_(capacity_),
      left_handle_(weights.size()),
      right_handle_(weights.size()) {
    if (weights.size() != inst.coords.size())
        throw InvalidInput("weight vector size " + std::to_string(weights.size()) +
                           " != vertex count " + std::to_string(inst.coords.size()));
    for (std::size_t i = 0; i < weights.size(); ++i) prefix_[i + 1] = prefix_[i] + weights[i];
}

void SlidingOneSink::reset() {
    left_.clear();
    right_.clear();
    lo_ = 0;
    hi_ = -1;
    sink_ = 0;
}

Time SlidingOneSink::heap_time(const BiHeap& h) const {
    const auto m = h.max();
    if (!m) return 0;
    return cm_ == CostModel::Discrete ? m->cost - 1 : m->cost;
}

void SlidingOneSink::push_right(int v) {
    if (empty()) {
        if (v < 0 || v >= static_cast<int>(left_handle_.size()))
            throw InvalidInput("vertex " + std::to_string(v) + " out of range");
        left_.clear();
        right_.clear();
        lo_ = hi_ = sink_ = v;
        return;
    }
    if (v != hi_ + 1 || v >= static_cast<int>(right_handle_.size()))
        throw InvalidInput("push_right expects vertex " + std::to_string(hi_ + 1));
    const Weight w = range_weight(v, v);
    right_.add_w(w);
    right_handle_[v] = right_.insert(w, travel(sink_, v));
    hi_ = v;
    rebalance();
}

void SlidingOneSink::pop_left() {
    if (empty()) throw InvalidInput("pop_left on an empty window");
    if (lo_ == hi_) {
        reset();
        return;
    }
    if (sink_ == lo_) move_sink_right();
    left_.erase(left_handle_[lo_]);
    left_.add_w(-range_weight(lo_, lo_));
    ++lo_;
    rebalance();
}

void SlidingOneSink::move_sink_right() {
    const int c = sink_;
    const Time d = travel(c, c + 1);
    left_.add_l(d);
    left_handle_[c] = left_.insert(range_weight(lo_, c), d);
    right_.erase(right_handle_[c + 1]);
    right_.add_l(-d);
    sink_ = c + 1;
    ++sink_moves_;
}

void SlidingOneSink::rebalance() {
    while (sink_ < hi_ && left_time() < right_time()) move_sink_right();
}

Time SlidingOneSink::right_time_from_prev() const {
    const Time d = travel(sink_ - 1, sink_);
    const Weight cumulative = range_weight(sink_, hi_);
    Time t = evac_term(cumulative, d, capacity_, cm_);
    if (!right_.empty()) t = std::max(t, right_time() + d);
    return t;
}

Time SlidingOneSink::value() const {
    if (empty()) return 0;
    const Time here = std::max(left_time(), right_time());
    if (sink_ == lo_) return here;
    return std::min(here, right_time_from_prev());
}

int SlidingOneSink::sink() const {
    if (empty()) throw InvalidInput("sink of an empty window");
    if (sink_ == lo_) return sink_;
    const Time here = std::max(left_time(), right_time());
    return right_time_from_prev() <= here ? sink_ - 1 : sink_;
}

// ---- DP ----

namespace {

void check_k(const PathInstance& inst, int k) {
    if (k < 1 || k > inst.n() + 1)
        throw InvalidInput("k = " + std::to_string(k) + " outside [1, " +
                           std::to_string(inst.n() + 1) + "]");
}

struct RowTargets {
    Time* values;
    int* arg_j;     // may be null
    int* arg_sink;  // may be null
};

// Fills row q from row q - 1 (`prev`, unused for q == 1). For fixed i the cost
// max(T(q-1, j-1), w(j, i)) is unimodal in j and its largest minimizer does not
// decrease with i, so j only moves forward: advance while the next value is no
// larger. Window a tracks [j, i], window b the lookahead [j+1, i].
void fill_row(int q, int n, const Time* prev, SlidingOneSink& a, SlidingOneSink& b,
              RowTargets out, OptStats* stats) {
    a.reset();
    b.reset();
    if (q == 1) {
        for (int i = 0; i <= n; ++i) {
            a.push_right(i);
            out.values[i] = a.value();
            if (out.arg_j) out.arg_j[i] = 0;
            if (out.arg_sink) out.arg_sink[i] = a.sink();
        }
        return;
    }
    for (int i = 0; i < q - 1 && i <= n; ++i) {
        out.values[i] = 0;
        if (out.arg_j) out.arg_j[i] = i;
        if (out.arg_sink) out.arg_sink[i] = i;
    }
    std::uint64_t increments = 0;
    std::uint64_t probes = 0;
    int j = q - 1;
    for (int i = q - 1; i <= n; ++i) {
        a.push_right(i);
        if (i > j) b.push_right(i);
        Time g = std::max(prev[j - 1], a.value());
        while (j < i) {
            ++probes;
            const Time next = std::max(prev[j], b.value());
            if (next > g) break;
            ++j;
            ++increments;
            a.pop_left();
            b.pop_left();
            g = next;
        }
        out.values[i] = g;
        if (out.arg_j) out.arg_j[i] = j;
        if (out.arg_sink) out.arg_sink[i] = a.sink();
    }
    if (stats) {
        stats->j_increments[q - 1] = increments;
        stats->j_probes[q - 1] = probes;
    }
}

}  // namespace

OptDpTable fill_opt_table(const PathInstance& inst, std::span<const Weight> weights, int k,
                          CostModel cm, OptStats* stats) {
    check_k(inst, k);
    OptDpTable t;
    t.k = k;
    t.n = inst.n();
    const std::size_t cells = static_cast<std::size_t>(k) * static_cast<std::size_t>(t.n + 1);
    t.values.assign(cells, 0);
    t.arg_j.assign(cells, 0);
    t.arg_sink.assign(cells, 0);
    if (stats) {
        stats->j_increments.assign(k, 0);
        stats->j_probes.assign(k, 0);
    }

    SlidingOneSink a(inst, weights, cm);
    SlidingOneSink b(inst, weights, cm);
    for (int q = 1; q <= k; ++q) {
        const std::size_t row = t.index(q, 0);
        const Time* prev = q == 1 ? nullptr : &t.values[t.index(q - 1, 0)];
        fill_row(q, t.n, prev, a, b, RowTargets{&t.values[row], &t.arg_j[row], &t.arg_sink[row]},
                 stats);
    }
    if (stats) {
        stats->heap_node_touches = a.node_touches() + b.node_touches();
        stats->sink_moves = a.sink_moves() + b.sink_moves();
    }
    return t;
}

Time optimal_k_sink_value(const PathInstance& inst, std::span<const Weight> weights, int k,
                          CostModel cm) {
    check_k(inst, k);
    const int n = inst.n();
    std::vector<Time> prev(n + 1, 0);
    std::vector<Time> cur(n + 1, 0);
    SlidingOneSink a(inst, weights, cm);
    SlidingOneSink b(inst, weights, cm);
    for (int q = 1; q <= k; ++q) {
        fill_row(q, n, prev.data(), a, b, RowTargets{cur.data(), nullptr, nullptr}, nullptr);
        std::swap(prev, cur);
    }
    return prev[n];
}

OptKSinkResult optimal_k_sink(const PathInstance& inst, const Scenario& s, int k, CostModel cm) {
    return optimal_k_sink(inst, std::span<const Weight>(s.weights), k, cm);
}

OptKSinkResult optimal_k_sink(const PathInstance& inst, std::span<const Weight> weights, int k,
                              CostModel cm) {
    OptKSinkResult res;
    const OptDpTable t = fill_opt_table(inst, weights, k, cm, &res.stats);
    res.time = t.T(k, t.n);

    std::vector<Part> parts;
    int i = t.n;
    for (int q = k; q >= 1; --q) {
        const int j = t.J(q, i);
        parts.push_back(Part{j, i, optimal_one_sink(inst, weights, j, i, cm).sink});
        i = j - 1;
    }
    std::reverse(parts.begin(), parts.end());
    res.plan = Plan(std::move(parts), t.n);
    return res;
}

}  // namespace kevac
