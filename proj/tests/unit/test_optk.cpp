#include <gtest/gtest.h>

#include <algorithm>

#include "kevac/evac.hpp"
#include "kevac/optk.hpp"
#include "kevac/oracle.hpp"
#include "support.hpp"

using namespace kevac;
using kevac::testing::fixed_instance;
using kevac::testing::random_instance;

namespace {

const PathInstance kUnit = fixed_instance({0, 1, 2}, {1, 1, 1});
const PathInstance kPairs = fixed_instance({0, 1, 2}, {2, 2, 2}, 2);

}  // namespace

TEST(OptimalOneSink, Examples) {
    const auto a = optimal_one_sink(kUnit, all_minus(kUnit), 0, 2, CostModel::Simplified);
    EXPECT_EQ(a.time, 2);
    EXPECT_EQ(a.sink, 1);
    const auto b = optimal_one_sink(kUnit, all_minus(kUnit), 2, 2, CostModel::Simplified);
    EXPECT_EQ(b.time, 0);
    EXPECT_EQ(b.sink, 2);
    const auto c = optimal_one_sink(kPairs, all_minus(kPairs), 0, 2, CostModel::Discrete);
    EXPECT_EQ(c.time, 1);
    EXPECT_EQ(c.sink, 1);
}

TEST(OptimalOneSink, LeftmostOfTheMinimizers) {
    Rng rng(2);
    for (int it = 0; it < 200; ++it) {
        const auto inst = random_instance(rng, 0, 12, 9, rng.uniform(1, 3));
        const Scenario s = all_plus(inst);
        const auto all = eval_all_sinks(inst, s, 0, inst.n(), CostModel::Discrete);
        const auto best = optimal_one_sink(inst, s, 0, inst.n(), CostModel::Discrete);
        const auto it_min = std::min_element(all.begin(), all.end());
        EXPECT_EQ(best.time, *it_min);
        EXPECT_EQ(best.sink, static_cast<int>(it_min - all.begin()));
    }
}

TEST(SlidingOneSinkTest, MatchesDirectMinimumUnderSlides) {
    Rng rng(4);
    for (int it = 0; it < 100; ++it) {
        const auto inst = random_instance(rng, 0, 25, 9, rng.uniform(1, 4), rng.uniform(1, 2));
        const Scenario s = all_plus(inst);
        for (CostModel cm : {CostModel::Discrete, CostModel::Simplified}) {
            SlidingOneSink w(inst, s.weights, cm);
            EXPECT_EQ(w.value(), 0);
            int next = 0;
            while (next <= inst.n() || !w.empty()) {
                const bool grow = next <= inst.n() && (w.empty() || rng.coin());
                if (grow) {
                    w.push_right(next++);
                } else {
                    w.pop_left();
                }
                if (w.empty()) continue;
                const auto ref = optimal_one_sink(inst, s, w.lo(), w.hi(), cm);
                ASSERT_EQ(w.value(), ref.time);
                ASSERT_EQ(eval_one_sink(inst, s, w.lo(), w.hi(), w.sink(), cm), ref.time);
            }
        }
    }
}

TEST(SlidingOneSinkTest, RejectsMisuse) {
    SlidingOneSink w(kUnit, all_minus(kUnit).weights, CostModel::Simplified);
    EXPECT_THROW(w.pop_left(), InvalidInput);
    w.push_right(0);
    EXPECT_THROW(w.push_right(2), InvalidInput);
}

TEST(OptimalKSink, Examples) {
    const auto one = optimal_k_sink(kUnit, all_minus(kUnit), 1, CostModel::Simplified);
    EXPECT_EQ(one.time, 2);
    const auto two = optimal_k_sink(kUnit, all_minus(kUnit), 2, CostModel::Simplified);
    EXPECT_EQ(two.time, 2);
    const auto all = optimal_k_sink(kUnit, all_minus(kUnit), 3, CostModel::Simplified);
    EXPECT_EQ(all.time, 0);
    EXPECT_EQ(all.plan, Plan({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}}, 2));
}

TEST(OptimalKSink, RejectsKOutOfRange) {
    EXPECT_THROW(optimal_k_sink(kUnit, all_minus(kUnit), 0, CostModel::Simplified), InvalidInput);
    EXPECT_THROW(optimal_k_sink(kUnit, all_minus(kUnit), 4, CostModel::Simplified), InvalidInput);
}

TEST(OptimalKSink, MatchesBruteForceAndPlanAchievesValue) {
    Rng rng(8);
    for (int it = 0; it < 300; ++it) {
        const auto inst = random_instance(rng, 0, 9, 10, rng.uniform(1, 3), rng.uniform(1, 2));
        const Scenario s = all_plus(inst);
        const int k = static_cast<int>(rng.uniform(1, std::min(3, inst.n() + 1)));
        for (CostModel cm : {CostModel::Discrete, CostModel::Simplified}) {
            const auto got = optimal_k_sink(inst, s, k, cm);
            ASSERT_EQ(got.time, brute_optimal_k_sink(inst, s, k, cm).value);
            ASSERT_EQ(got.plan.k(), k);
            ASSERT_EQ(eval_plan(inst, s, got.plan, cm).time, got.time);
            ASSERT_EQ(optimal_k_sink_value(inst, s.weights, k, cm), got.time);
        }
    }
}

TEST(OptimalKSink, TableMonotonicityAndCounters) {
    Rng rng(13);
    for (int it = 0; it < 100; ++it) {
        const auto inst = random_instance(rng, 1, 40, 10, rng.uniform(1, 3));
        const Scenario s = all_plus(inst);
        const int k = static_cast<int>(rng.uniform(1, std::min(5, inst.n() + 1)));
        OptStats stats;
        const OptDpTable t = fill_opt_table(inst, s.weights, k, CostModel::Discrete, &stats);
        ASSERT_EQ(stats.j_increments.size(), static_cast<std::size_t>(k));
        for (int q = 1; q <= k; ++q) {
            EXPECT_LE(stats.j_increments[q - 1], 2u * static_cast<std::uint64_t>(inst.n() + 1));
            for (int i = 1; i <= inst.n(); ++i) {
                EXPECT_LE(t.T(q, i - 1), t.T(q, i));
                if (i >= q) EXPECT_LE(t.J(q, i - 1), t.J(q, i));
            }
            if (q > 1)
                for (int i = 0; i <= inst.n(); ++i) EXPECT_LE(t.T(q, i), t.T(q - 1, i));
        }
    }
}

TEST(OptimalKSink, LargeInstanceStaysLinearInCounters) {
    GenOptions g;
    g.n = 5000;
    g.coord_max = 50000;
    g.w_max = 20;
    g.capacity = 3;
    g.seed = 1;
    const auto inst = generate_instance(g);
    const auto res = optimal_k_sink(inst, all_plus(inst), 4, CostModel::Discrete);
    for (auto inc : res.stats.j_increments) EXPECT_LE(inc, 2u * 5001u);
    EXPECT_EQ(eval_plan(inst, all_plus(inst), res.plan, CostModel::Discrete).time, res.time);
}
