#include "kevac/regret.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include "kevac/evac.hpp"
#include "kevac/optk.hpp"
#include "kevac/scenario_gen.hpp"

namespace kevac {

namespace {

constexpr Time kNegInf = std::numeric_limits<Time>::min() / 4;

constexpr std::uint64_t kOptCacheMagic = 0x3130504f4356454bULL;  // "KEVCOP01"
constexpr std::uint64_t kRjiMagic = 0x313049524356454bULL;       // "KEVCRI01"
constexpr std::uint64_t kFormatVersion = 1;

void put_u64(std::ostream& out, std::uint64_t v) {
    char bytes[8];
    for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(bytes, 8);
}

std::uint64_t get_u64(std::istream& in) {
    unsigned char bytes[8];
    in.read(reinterpret_cast<char*>(bytes), 8);
    if (!in) throw InvalidInput("truncated binary file");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
    return v;
}

void put_i64(std::ostream& out, std::int64_t v) { put_u64(out, static_cast<std::uint64_t>(v)); }
std::int64_t get_i64(std::istream& in) { return static_cast<std::int64_t>(get_u64(in)); }

void read_header(std::istream& in, std::uint64_t magic, const char* what) {
    if (get_u64(in) != magic) throw InvalidInput(std::string("not a ") + what + " file");
    const std::uint64_t version = get_u64(in);
    if (version != kFormatVersion)
        throw InvalidInput(std::string("unsupported ") + what + " version " + std::to_string(version));
}

}  // namespace

// ---- ScenarioOptCache ----

ScenarioOptCache::ScenarioOptCache(const PathInstance& inst, int k, CostModel cm)
    : inst_(inst), k_(k), cm_(cm) {
    require_valid(inst_);
    if (k < 1 || k > inst_.n() + 1)
        throw InvalidInput("k = " + std::to_string(k) + " outside [1, " +
                           std::to_string(inst_.n() + 1) + "]");
    const std::size_t m = static_cast<std::size_t>(inst_.n() + 2);
    values_.assign(m * (m + 1) / 2, 0);
    known_.assign(values_.size(), 0);
}

std::size_t ScenarioOptCache::slot(ScenarioDescriptor d) const {
    const int n = inst_.n();
    if (d.t1 < 0 || d.t1 > d.t2 || d.t2 > n + 1)
        throw InvalidInput("scenario descriptor (" + std::to_string(d.t1) + "," +
                           std::to_string(d.t2) + ") out of range");
    if (d.t1 == d.t2) return 0;
    const std::size_t t1 = static_cast<std::size_t>(d.t1);
    const std::size_t row = t1 * static_cast<std::size_t>(n + 2) - t1 * (t1 - (t1 > 0 ? 1 : 0)) / 2;
    return row + static_cast<std::size_t>(d.t2 - d.t1);
}

Time ScenarioOptCache::get(ScenarioDescriptor d) {
    const std::size_t s = slot(d);
    if (!known_[s]) {
        const Scenario sc = realize_scenario(inst_, d);
        values_[s] = optimal_k_sink_value(inst_, sc.weights, k_, cm_);
        known_[s] = 1;
        ++computed_;
    }
    return values_[s];
}

std::optional<Time> ScenarioOptCache::find(ScenarioDescriptor d) const {
    const std::size_t s = slot(d);
    if (!known_[s]) return std::nullopt;
    return values_[s];
}

Time ScenarioOptCache::at(ScenarioDescriptor d) const {
    const std::size_t s = slot(d);
    if (!known_[s])
        throw InvalidInput("optimal time for descriptor (" + std::to_string(d.t1) + "," +
                           std::to_string(d.t2) + ") not computed");
    return values_[s];
}

void ScenarioOptCache::fill_all() {
    const int n = inst_.n();
    get(ScenarioDescriptor{0, 0});
    for (int t1 = 0; t1 <= n; ++t1)
        for (int t2 = t1 + 1; t2 <= n + 1; ++t2) get(ScenarioDescriptor{t1, t2});
}

void ScenarioOptCache::dump(std::ostream& out) const {
    put_u64(out, kOptCacheMagic);
    put_u64(out, kFormatVersion);
    put_i64(out, inst_.n());
    put_i64(out, k_);
    put_i64(out, cm_ == CostModel::Discrete ? 0 : 1);
    for (std::size_t s = 0; s < values_.size(); ++s) {
        put_i64(out, known_[s]);
        put_i64(out, values_[s]);
    }
}

ScenarioOptCache ScenarioOptCache::load(std::istream& in, const PathInstance& inst) {
    read_header(in, kOptCacheMagic, "optimal-time cache");
    const std::int64_t n = get_i64(in);
    const std::int64_t k = get_i64(in);
    const CostModel cm = get_i64(in) == 0 ? CostModel::Discrete : CostModel::Simplified;
    if (n != inst.n())
        throw InvalidInput("cache built for n = " + std::to_string(n) + ", instance has n = " +
                           std::to_string(inst.n()));
    ScenarioOptCache cache(inst, static_cast<int>(k), cm);
    for (std::size_t s = 0; s < cache.values_.size(); ++s) {
        cache.known_[s] = get_i64(in) != 0 ? 1 : 0;
        cache.values_[s] = get_i64(in);
        cache.computed_ += cache.known_[s];
    }
    return cache;
}

// ---- EvacLookupTables ----

EvacLookupTables EvacLookupTables::build(const PathInstance& inst, BuildOptions opts) {
    require_valid(inst);
    EvacLookupTables tb;
    const int n = inst.n();
    tb.n_ = n;
    const std::size_t sq = static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1);

    std::vector<Time> x(n + 1);
    for (int u = 0; u <= n; ++u) x[u] = inst.coords[u] * inst.tau;
    std::vector<Weight> plus(n + 2, 0);
    for (int u = 0; u <= n; ++u) plus[u + 1] = plus[u] + inst.wplus[u];
    auto wplus = [&](int a, int b) { return plus[b + 1] - plus[a]; };

    tb.left_offset_.assign(sq, 0);
    tb.right_offset_.assign(sq, 0);
    std::size_t left_size = 0;
    std::size_t right_size = 0;
    for (int a = 0; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            tb.left_offset_[tb.idx2(a, b)] = left_size;
            left_size += static_cast<std::size_t>(b - a);
            tb.right_offset_[tb.idx2(a, b)] = right_size;
            right_size += static_cast<std::size_t>(b - a);
        }
    }
    tb.left_.assign(left_size, 0);
    tb.right_.assign(right_size, 0);
    tb.left_minus_.assign(sq, 0);
    tb.right_minus_.assign(sq, 0);

    // Left side of sink t with w+ on [l, m] and w- on (m, t):
    //   max over u <= m of x_t - x_u + W+(l..u)        = x_t + lead(l, m)
    //   max over u > m  of x_t - x_u + W+(l..m) + W-(m+1..u) = W+(l..m) + tail_t(m)
    // lead(l, m) = max_{l<=u<=m} W+(l..u) - x_u.
    std::vector<Time> lead(sq, 0);
    for (int l = 0; l <= n; ++l) {
        Time best = kNegInf;
        for (int m = l; m <= n; ++m) {
            best = std::max(best, wplus(l, m) - x[m]);
            lead[tb.idx2(l, m)] = best;
        }
    }
    // Right side of sink t with w- on (t, m) and w+ on [m, r]:
    //   max over u >= m of x_u - x_t + W+(u..r)        = trail(m, r) - x_t
    //   max over u < m  of x_u - x_t + W-(u..m-1) + W+(m..r) = W+(m..r) + head_t(m)
    // trail(m, r) = max_{m<=u<=r} x_u + W+(u..r).
    std::vector<Time> trail(sq, 0);
    for (int r = 0; r <= n; ++r) {
        Time best = kNegInf;
        for (int m = r; m >= 0; --m) {
            best = std::max(best, x[m] + wplus(m, r));
            trail[tb.idx2(m, r)] = best;
        }
    }

    std::vector<Time> tail(n + 2);  // tail[m + 1] = tail_t(m), m in [-1, t-1]
    std::vector<Time> head(n + 2);  // head[m] = head_t(m), m in [t+1, n+1]
    for (int t = 0; t <= n; ++t) {
        tail[t] = kNegInf;
        for (int m = t - 1; m >= 0; --m)
            tail[m] = inst.wminus[m] + std::max(x[t] - x[m], tail[m + 1]);
        for (int l = 0; l < t; ++l) {
            tb.left_minus_[tb.idx2(l, t)] = tail[l];
            const std::size_t off = tb.left_offset_[tb.idx2(l, t)];
            for (int m = l; m < t; ++m)
                tb.left_[off + (m - l)] =
                    std::max(x[t] + lead[tb.idx2(l, m)], wplus(l, m) + tail[m + 1]);
        }

        if (t + 1 <= n + 1) head[t + 1] = kNegInf;
        for (int m = t + 1; m <= n; ++m)
            head[m + 1] = std::max(head[m], x[m] - x[t]) + inst.wminus[m];
        for (int r = t + 1; r <= n; ++r) {
            tb.right_minus_[tb.idx2(t, r)] = head[r + 1];
            const std::size_t off = tb.right_offset_[tb.idx2(t, r)];
            for (int m = t + 1; m <= r; ++m)
                tb.right_[off + (m - t - 1)] =
                    std::max(trail[tb.idx2(m, r)] - x[t], wplus(m, r) + head[m]);
        }
    }

    if (opts.validate) {
        auto fix = [&](Time& stored, Time direct) {
            if (stored != direct) {
                stored = direct;
                ++tb.fallbacks_;
            }
        };
        for (int t = 0; t <= n; ++t) {
            for (int l = 0; l < t; ++l) {
                for (int m = l - 1; m < t; ++m) {
                    Time best = 0;
                    Weight cum = 0;
                    for (int u = l; u < t; ++u) {
                        cum += u <= m ? inst.wplus[u] : inst.wminus[u];
                        best = std::max(best, x[t] - x[u] + cum);
                    }
                    if (m < l)
                        fix(tb.left_minus_[tb.idx2(l, t)], best);
                    else
                        fix(tb.left_[tb.left_offset_[tb.idx2(l, t)] + (m - l)], best);
                }
            }
            for (int r = t + 1; r <= n; ++r) {
                for (int m = t + 1; m <= r + 1; ++m) {
                    Time best = 0;
                    Weight cum = 0;
                    for (int u = r; u > t; --u) {
                        cum += u >= m ? inst.wplus[u] : inst.wminus[u];
                        best = std::max(best, x[u] - x[t] + cum);
                    }
                    if (m > r)
                        fix(tb.right_minus_[tb.idx2(t, r)], best);
                    else
                        fix(tb.right_[tb.right_offset_[tb.idx2(t, r)] + (m - t - 1)], best);
                }
            }
        }
    }
    return tb;
}

Time EvacLookupTables::left(int l, int m, int t) const {
    if (!(0 <= l && l <= m && m < t && t <= n_))
        throw InvalidInput("left table index (" + std::to_string(l) + "," + std::to_string(m) +
                           "," + std::to_string(t) + ") outside 0 <= l <= m < t <= n");
    return left_unchecked(l, m, t);
}

Time EvacLookupTables::right(int t, int m, int r) const {
    if (!(0 <= t && t < m && m <= r && r <= n_))
        throw InvalidInput("right table index (" + std::to_string(t) + "," + std::to_string(m) +
                           "," + std::to_string(r) + ") outside 0 <= t < m <= r <= n");
    return right_unchecked(t, m, r);
}

Time EvacLookupTables::left_minus(int l, int t) const {
    if (!(0 <= l && l <= t && t <= n_))
        throw InvalidInput("left_minus index (" + std::to_string(l) + "," + std::to_string(t) +
                           ") outside 0 <= l <= t <= n");
    return left_minus_unchecked(l, t);
}

Time EvacLookupTables::right_minus(int t, int r) const {
    if (!(0 <= t && t <= r && r <= n_))
        throw InvalidInput("right_minus index (" + std::to_string(t) + "," + std::to_string(r) +
                           ") outside 0 <= t <= r <= n");
    return right_minus_unchecked(t, r);
}

// ---- RjiMatrix ----

RjiMatrix::RjiMatrix(int n)
    : n_(n),
      values_(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1), 0),
      sinks_(values_.size(), 0) {}

void RjiMatrix::dump(std::ostream& out) const {
    put_u64(out, kRjiMagic);
    put_u64(out, kFormatVersion);
    put_i64(out, n_);
    put_i64(out, static_cast<std::int64_t>(sink_evaluations));
    for (std::size_t s = 0; s < values_.size(); ++s) {
        put_i64(out, values_[s]);
        put_i64(out, sinks_[s]);
    }
}

RjiMatrix RjiMatrix::load(std::istream& in) {
    read_header(in, kRjiMagic, "R(j,i) matrix");
    const std::int64_t n = get_i64(in);
    if (n < 0 || n > (1 << 20)) throw InvalidInput("implausible matrix size");
    RjiMatrix m(static_cast<int>(n));
    m.sink_evaluations = static_cast<std::uint64_t>(get_i64(in));
    for (std::size_t s = 0; s < m.values_.size(); ++s) {
        m.values_[s] = get_i64(in);
        m.sinks_[s] = static_cast<int>(get_i64(in));
    }
    return m;
}

// ---- regret ----

Time sink_max_regret(const EvacLookupTables& tb, const ScenarioOptCache& cache, int l, int r,
                     int t) {
    const Time left_min = tb.left_minus_unchecked(l, t);
    const Time right_min = tb.right_minus_unchecked(t, r);
    Time best = std::max(left_min, right_min) - cache.at(ScenarioDescriptor{0, 0});
    for (int m = l; m < t; ++m) {
        const Time ev = std::max(tb.left_unchecked(l, m, t), right_min);
        best = std::max(best, ev - cache.at(ScenarioDescriptor{l, m + 1}));
    }
    for (int m = t + 1; m <= r; ++m) {
        const Time ev = std::max(left_min, tb.right_unchecked(t, m, r));
        best = std::max(best, ev - cache.at(ScenarioDescriptor{m, r + 1}));
    }
    return best;
}

RjiMatrix compute_rji(const PathInstance& inst, const ScenarioOptCache& cache,
                      const EvacLookupTables& tables) {
    const int n = inst.n();
    if (tables.n() != n || cache.n() != n)
        throw InvalidInput("tables, cache and instance disagree on n");
    if (cache.cost_model() != CostModel::Simplified)
        throw InvalidInput("R(j,i) tables use the simplified cost model");
    RjiMatrix out(n);
    for (int l = 0; l <= n; ++l) {
        // For fixed l the rightmost optimal sink does not move left as r grows, and
        // for fixed (l, r) the sink cost is unimodal, so a forward scan suffices.
        int t = l;
        for (int r = l; r <= n; ++r) {
            Time ft = sink_max_regret(tables, cache, l, r, t);
            ++out.sink_evaluations;
            while (t < r) {
                const Time next = sink_max_regret(tables, cache, l, r, t + 1);
                ++out.sink_evaluations;
                if (next > ft) break;
                ++t;
                ft = next;
            }
            out.set(l, r, ft, t);
        }
    }
    return out;
}

Time regret_of_plan(const PathInstance& inst, const Plan& plan, const Scenario& s, CostModel cm) {
    return eval_plan(inst, s, plan, cm).time -
           optimal_k_sink_value(inst, s.weights, plan.k(), cm);
}

Time regret_of_plan(const PathInstance& inst, const Plan& plan, ScenarioDescriptor d,
                    ScenarioOptCache& cache) {
    if (cache.k() != plan.k())
        throw InvalidInput("cache holds " + std::to_string(cache.k()) + "-sink optima, plan has " +
                           std::to_string(plan.k()) + " parts");
    const Scenario s = realize_scenario(inst, d);
    return eval_plan(inst, s, plan, cache.cost_model()).time - cache.get(d);
}

MaxRegret max_regret_of_plan(const PathInstance& inst, const Plan& plan, ScenarioOptCache& cache) {
    MaxRegret best;
    bool first = true;
    for (const PartCandidate& c : enumerate_partition_candidates(inst, plan)) {
        const Time v = regret_of_plan(inst, plan, c.descriptor, cache);
        if (first || v > best.value) {
            best.value = v;
            best.witness = c.descriptor;
            first = false;
        }
    }
    return best;
}

}  // namespace kevac
