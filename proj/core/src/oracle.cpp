#include "kevac/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <string>

#include "kevac/evac.hpp"
#include "kevac/generate.hpp"

namespace kevac {

namespace {

void guard(bool ok, const std::string& what) {
    if (!ok) throw InvalidInput("size guard exceeded: " + what);
}

// Calls fn(ends) for every list of right ends r_1 < ... < r_k = n.
void for_each_composition(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> ends;
    std::function<void(int, int)> rec = [&](int start, int parts_left) {
        if (parts_left == 1) {
            ends.push_back(n);
            fn(ends);
            ends.pop_back();
            return;
        }
        for (int r = start; r <= n - (parts_left - 1); ++r) {
            ends.push_back(r);
            rec(r + 1, parts_left - 1);
            ends.pop_back();
        }
    };
    rec(0, k);
}

// Calls fn(plan) for every composition and every sink choice.
void for_each_plan(int n, int k, const std::function<void(const Plan&)>& fn) {
    for_each_composition(n, k, [&](const std::vector<int>& ends) {
        std::vector<int> sinks(ends.size());
        std::function<void(std::size_t)> rec = [&](std::size_t d) {
            if (d == ends.size()) {
                fn(Plan::from_boundaries(ends, sinks, n));
                return;
            }
            const int l = d == 0 ? 0 : ends[d - 1] + 1;
            for (int t = l; t <= ends[d]; ++t) {
                sinks[d] = t;
                rec(d + 1);
            }
        };
        rec(0);
    });
}

Scenario step_scenario(const PathInstance& inst, int t1, int t2) {
    Scenario s{inst.wminus};
    for (int i = t1; i < t2; ++i) s.weights[i] = inst.wplus[i];
    return s;
}

std::vector<Scenario> corner_scenarios(const PathInstance& inst) {
    std::vector<int> free;
    for (int i = 0; i <= inst.n(); ++i)
        if (inst.wminus[i] != inst.wplus[i]) free.push_back(i);
    std::vector<Scenario> out;
    const std::uint64_t count = std::uint64_t{1} << free.size();
    out.reserve(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        Scenario s{inst.wminus};
        for (std::size_t b = 0; b < free.size(); ++b)
            if ((mask >> b) & 1U) s.weights[free[b]] = inst.wplus[free[b]];
        out.push_back(std::move(s));
    }
    return out;
}

Time brute_opt_value(const PathInstance& inst, const Scenario& s, int k) {
    return brute_optimal_k_sink(inst, s, k, CostModel::Simplified).value;
}

}  // namespace

BruteResult brute_optimal_k_sink(const PathInstance& inst, const Scenario& s, int k, CostModel cm) {
    const int n = inst.n();
    guard(n <= 12 && k <= 4, "brute_optimal_k_sink needs n <= 12 and k <= 4");
    if (k < 1 || k > n + 1) throw InvalidInput("k out of range");
    BruteResult best;
    bool found = false;
    for_each_composition(n, k, [&](const std::vector<int>& ends) {
        Time worst = 0;
        std::vector<int> sinks;
        int l = 0;
        for (int r : ends) {
            Time part_best = std::numeric_limits<Time>::max();
            int part_sink = l;
            for (int t = l; t <= r; ++t) {
                const Time v = eval_one_sink(inst, s, l, r, t, cm);
                if (v < part_best) {
                    part_best = v;
                    part_sink = t;
                }
            }
            worst = std::max(worst, part_best);
            sinks.push_back(part_sink);
            l = r + 1;
        }
        if (!found || worst < best.value) {
            best.value = worst;
            best.plan = Plan::from_boundaries(ends, sinks, n);
            found = true;
        }
    });
    return best;
}

Time brute_max_regret_corners(const PathInstance& inst, const Plan& plan) {
    guard(inst.n() <= 10 && plan.k() <= 4, "brute_max_regret_corners needs n <= 10 and k <= 4");
    Time worst = std::numeric_limits<Time>::min();
    for (const Scenario& s : corner_scenarios(inst)) {
        const Time v = eval_plan(inst, s, plan, CostModel::Simplified).time -
                       brute_opt_value(inst, s, plan.k());
        worst = std::max(worst, v);
    }
    return worst;
}

Time brute_max_regret_structured(const PathInstance& inst, const Plan& plan) {
    guard(inst.n() <= 12 && plan.k() <= 4, "brute_max_regret_structured needs n <= 12 and k <= 4");
    Time worst = std::numeric_limits<Time>::min();
    for (const Part& p : plan.parts()) {
        for (int i = p.l; i <= p.r + 1; ++i) {
            for (const auto& [t1, t2] : {std::pair{p.l, i}, std::pair{i, p.r + 1}}) {
                const Scenario s = step_scenario(inst, t1, t2);
                const Time v = eval_plan(inst, s, plan, CostModel::Simplified).time -
                               brute_opt_value(inst, s, plan.k());
                worst = std::max(worst, v);
            }
        }
    }
    return worst;
}

BruteMinmaxResult brute_minmax_regret(const PathInstance& inst, int k) {
    const int n = inst.n();
    guard(n <= 8 && k <= 3, "brute_minmax_regret needs n <= 8 and k <= 3");
    if (k < 1 || k > n + 1) throw InvalidInput("k out of range");

    const std::vector<Scenario> corners = corner_scenarios(inst);
    std::vector<Time> corner_opt;
    corner_opt.reserve(corners.size());
    for (const Scenario& s : corners) corner_opt.push_back(brute_opt_value(inst, s, k));

    std::map<std::pair<int, int>, Time> step_opt;
    auto step_value = [&](int t1, int t2) {
        auto it = step_opt.find({t1, t2});
        if (it != step_opt.end()) return it->second;
        const Time v = brute_opt_value(inst, step_scenario(inst, t1, t2), k);
        step_opt.emplace(std::pair{t1, t2}, v);
        return v;
    };

    BruteMinmaxResult res;
    res.corners = corners.size();
    bool found = false;
    for_each_plan(n, k, [&](const Plan& plan) {
        ++res.plans;
        Time corner_max = std::numeric_limits<Time>::min();
        for (std::size_t c = 0; c < corners.size(); ++c)
            corner_max = std::max(corner_max,
                                  eval_plan(inst, corners[c], plan, CostModel::Simplified).time -
                                      corner_opt[c]);

        Time structured_max = std::numeric_limits<Time>::min();
        for (const Part& p : plan.parts()) {
            for (int i = p.l; i <= p.r + 1; ++i) {
                for (const auto& [t1, t2] : {std::pair{p.l, i}, std::pair{i, p.r + 1}}) {
                    const Time v = eval_plan(inst, step_scenario(inst, t1, t2), plan,
                                             CostModel::Simplified)
                                       .time -
                                   step_value(t1, t2);
                    structured_max = std::max(structured_max, v);
                }
            }
        }
        if (structured_max != corner_max) ++res.structured_mismatches;

        if (!found || corner_max < res.value) {
            res.value = corner_max;
            res.plan = plan;
            found = true;
        }
    });
    return res;
}

BruteRji brute_rji(const PathInstance& inst, int k) {
    const int n = inst.n();
    guard(n <= 10 && k <= 4, "brute_rji needs n <= 10 and k <= 4");
    std::vector<Scenario> scenarios;
    std::vector<Time> opt;
    for (int t1 = 0; t1 <= n + 1; ++t1) {
        for (int t2 = t1; t2 <= n + 1; ++t2) {
            scenarios.push_back(step_scenario(inst, t1, t2));
            opt.push_back(brute_opt_value(inst, scenarios.back(), k));
        }
    }

    BruteRji out;
    out.n = n;
    const std::size_t cells = static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1);
    out.values.assign(cells, 0);
    out.sink_regret.assign(cells, {});
    for (int j = 0; j <= n; ++j) {
        for (int i = j; i <= n; ++i) {
            std::vector<Time> per_sink;
            for (int t = j; t <= i; ++t) {
                Time worst = std::numeric_limits<Time>::min();
                for (std::size_t c = 0; c < scenarios.size(); ++c)
                    worst = std::max(worst, eval_one_sink(inst, scenarios[c], j, i, t,
                                                          CostModel::Simplified) -
                                                opt[c]);
                per_sink.push_back(worst);
            }
            const std::size_t idx = static_cast<std::size_t>(j) * (n + 1) + i;
            out.values[idx] = *std::min_element(per_sink.begin(), per_sink.end());
            out.sink_regret[idx] = std::move(per_sink);
        }
    }
    return out;
}

// ---- Bi-Heap mirror ----

namespace {

std::int64_t ceiling(std::int64_t a, std::int64_t c) {
    std::int64_t q = a / c;
    if (a % c != 0 && a > 0) ++q;
    return q;
}

}  // namespace

std::vector<std::optional<Time>> naive_biheap_mirror(std::int64_t capacity,
                                                     const std::vector<BiHeapOp>& ops) {
    if (capacity < 1) throw InvalidInput("capacity must be >= 1");
    struct Item {
        std::int64_t w;
        std::int64_t l;
        bool live;
    };
    std::vector<Item> items;
    std::vector<std::optional<Time>> out;
    out.reserve(ops.size());
    for (const BiHeapOp& op : ops) {
        switch (op.kind) {
            case BiHeapOp::Kind::AddW:
                for (Item& it : items)
                    if (it.live) it.w += op.w;
                break;
            case BiHeapOp::Kind::AddL:
                for (Item& it : items)
                    if (it.live) it.l += op.l;
                break;
            case BiHeapOp::Kind::Insert:
                items.push_back(Item{op.w, op.l, true});
                break;
            case BiHeapOp::Kind::Delete:
                if (op.target >= items.size() || !items[op.target].live)
                    throw InvalidInput("delete of a pair that is not live");
                items[op.target].live = false;
                break;
        }
        std::optional<Time> best;
        for (const Item& it : items) {
            if (!it.live) continue;
            const Time c = ceiling(it.w, capacity) + it.l;
            if (!best || c > *best) best = c;
        }
        out.push_back(best);
    }
    return out;
}

std::vector<BiHeapOp> random_biheap_ops(std::uint64_t seed, std::size_t count,
                                        std::int64_t value_range) {
    Rng rng(seed);
    std::vector<BiHeapOp> ops;
    ops.reserve(count);
    std::vector<std::size_t> live;
    std::size_t inserted = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const std::int64_t r = rng.uniform(0, 9);
        BiHeapOp op;
        if (r < 4 || live.empty()) {
            op.kind = BiHeapOp::Kind::Insert;
            op.w = rng.uniform(-value_range, value_range);
            op.l = rng.uniform(-value_range, value_range);
            live.push_back(inserted++);
        } else if (r < 6) {
            op.kind = BiHeapOp::Kind::Delete;
            const std::size_t pick = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(live.size()) - 1));
            op.target = live[pick];
            live[pick] = live.back();
            live.pop_back();
        } else if (r < 8) {
            op.kind = BiHeapOp::Kind::AddW;
            op.w = rng.uniform(-value_range, value_range);
        } else {
            op.kind = BiHeapOp::Kind::AddL;
            op.l = rng.uniform(-value_range, value_range);
        }
        ops.push_back(op);
    }
    return ops;
}

}  // namespace kevac
