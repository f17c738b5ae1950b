#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "kevac/model.hpp"

namespace kevac {

/// Optimal k-sink time of the full path under step scenarios, keyed by
/// descriptor. All (t, t) descriptors share the all-minus entry.
class ScenarioOptCache {
public:
    ScenarioOptCache(const PathInstance& inst, int k, CostModel cm = CostModel::Simplified);

    /// Computes on first use.
    Time get(ScenarioDescriptor d);
    /// Throws InvalidInput when the entry has not been computed.
    Time at(ScenarioDescriptor d) const;
    std::optional<Time> find(ScenarioDescriptor d) const;
    /// Computes every distinct descriptor.
    void fill_all();

    std::size_t computed() const { return computed_; }
    int k() const { return k_; }
    int n() const { return inst_.n(); }
    CostModel cost_model() const { return cm_; }
    const PathInstance& instance() const { return inst_; }

    /// Binary format: magic, version, n, k, cost model, then (known, value) per
    /// slot; little-endian 64-bit integers.
    void dump(std::ostream& out) const;
    static ScenarioOptCache load(std::istream& in, const PathInstance& inst);

private:
    std::size_t slot(ScenarioDescriptor d) const;

    PathInstance inst_;
    int k_;
    CostModel cm_;
    std::vector<Time> values_;
    std::vector<std::uint8_t> known_;
    std::size_t computed_ = 0;
};

/// Simplified-model evacuation times of one side of a sink under the step
/// scenarios that matter for regret:
///   left(l, m, t),  l <= m < t:  w+ on [l, m], w- on (m, t); vertices [l, t) into sink t
///   right(t, m, r), t < m <= r:  w- on (t, m), w+ on [m, r]; vertices (t, r] into sink t
///   left_minus(l, t), right_minus(t, r): all vertices at w- (0 for an empty side)
class EvacLookupTables {
public:
    struct BuildOptions {
        /// Compare every entry with direct evaluation and keep the direct value on
        /// mismatch.
        bool validate = false;
    };

    static EvacLookupTables build(const PathInstance& inst, BuildOptions opts);
    static EvacLookupTables build(const PathInstance& inst) { return build(inst, BuildOptions{}); }

    /// Throw InvalidInput outside the declared index ranges.
    Time left(int l, int m, int t) const;
    Time right(int t, int m, int r) const;
    Time left_minus(int l, int t) const;
    Time right_minus(int t, int r) const;

    /// Unchecked versions for inner loops.
    Time left_unchecked(int l, int m, int t) const {
        return left_[left_offset_[idx2(l, t)] + static_cast<std::size_t>(m - l)];
    }
    Time right_unchecked(int t, int m, int r) const {
        return right_[right_offset_[idx2(t, r)] + static_cast<std::size_t>(m - t - 1)];
    }
    Time left_minus_unchecked(int l, int t) const { return left_minus_[idx2(l, t)]; }
    Time right_minus_unchecked(int t, int r) const { return right_minus_[idx2(t, r)]; }

    int n() const { return n_; }
    std::size_t entries() const { return left_.size() + right_.size(); }
    /// Entries whose recurrence value disagreed with direct evaluation (validated builds).
    std::size_t fallbacks() const { return fallbacks_; }

private:
    std::size_t idx2(int a, int b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_ + 1) +
               static_cast<std::size_t>(b);
    }

    int n_ = -1;
    std::vector<Time> left_;
    std::vector<Time> right_;
    std::vector<std::size_t> left_offset_;
    std::vector<std::size_t> right_offset_;
    std::vector<Time> left_minus_;
    std::vector<Time> right_minus_;
    std::size_t fallbacks_ = 0;
};

/// R(j, i): minimax regret of [j, i] taken as the dominant part, over the sinks
/// of [j, i] and the full-path step scenarios; signed, never clamped. Also keeps
/// the rightmost minimizing sink.
class RjiMatrix {
public:
    RjiMatrix() = default;
    explicit RjiMatrix(int n);

    Time R(int j, int i) const { return values_[idx(j, i)]; }
    int sink(int j, int i) const { return sinks_[idx(j, i)]; }
    void set(int j, int i, Time value, int sink) {
        values_[idx(j, i)] = value;
        sinks_[idx(j, i)] = sink;
    }
    int n() const { return n_; }

    /// Sink-candidate evaluations made while building.
    std::uint64_t sink_evaluations = 0;

    void dump(std::ostream& out) const;
    static RjiMatrix load(std::istream& in);

    bool operator==(const RjiMatrix& o) const {
        return n_ == o.n_ && values_ == o.values_ && sinks_ == o.sinks_;
    }

private:
    std::size_t idx(int j, int i) const {
        return static_cast<std::size_t>(j) * static_cast<std::size_t>(n_ + 1) +
               static_cast<std::size_t>(i);
    }

    int n_ = -1;
    std::vector<Time> values_;
    std::vector<int> sinks_;
};

/// Max regret of sink t for the dominant part [l, r]: max over the left-dominant
/// descriptors (l, m + 1), m in [l, t), the all-minus scenario, and the
/// right-dominant descriptors (m, r + 1), m in (t, r]. Every other scenario is
/// dominated by one of these for a fixed sink.
Time sink_max_regret(const EvacLookupTables& tables, const ScenarioOptCache& cache, int l, int r,
                     int t);

/// Requires a filled cache (Simplified model).
RjiMatrix compute_rji(const PathInstance& inst, const ScenarioOptCache& cache,
                      const EvacLookupTables& tables);

/// eval_plan(plan, s) - optimal plan.k()-sink time under s.
Time regret_of_plan(const PathInstance& inst, const Plan& plan, const Scenario& s,
                    CostModel cm = CostModel::Simplified);
Time regret_of_plan(const PathInstance& inst, const Plan& plan, ScenarioDescriptor d,
                    ScenarioOptCache& cache);

struct MaxRegret {
    Time value = 0;
    ScenarioDescriptor witness;
};

/// Max over the plan's structured candidates; the witness is the first maximizer
/// in candidate order.
MaxRegret max_regret_of_plan(const PathInstance& inst, const Plan& plan, ScenarioOptCache& cache);

}  // namespace kevac
