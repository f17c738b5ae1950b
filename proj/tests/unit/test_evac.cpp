#include <gtest/gtest.h>

#include "kevac/evac.hpp"
#include "support.hpp"

using namespace kevac;
using kevac::testing::fixed_instance;
using kevac::testing::random_instance;

namespace {

const PathInstance kUnit = fixed_instance({0, 1, 2}, {1, 1, 1});
const PathInstance kPairs = fixed_instance({0, 1, 2}, {2, 2, 2}, 2);

}  // namespace

TEST(EvalSide, LeftSideTieKeepsLeftmostIndex) {
    const auto r = eval_side(kUnit, all_minus(kUnit), 0, 2, 2, Side::Left, CostModel::Discrete);
    EXPECT_EQ(r.time, 2);
    ASSERT_TRUE(r.argmax_index.has_value());
    EXPECT_EQ(*r.argmax_index, 0);
}

TEST(EvalSide, RightSideTieKeepsRightmostIndex) {
    const auto r = eval_side(kUnit, all_minus(kUnit), 0, 2, 0, Side::Right, CostModel::Discrete);
    EXPECT_EQ(r.time, 2);
    EXPECT_EQ(*r.argmax_index, 2);
}

TEST(EvalSide, CongestionCeiling) {
    const auto r = eval_side(kPairs, all_minus(kPairs), 0, 2, 1, Side::Left, CostModel::Discrete);
    EXPECT_EQ(r.time, 1);
}

TEST(EvalSide, EmptySideIsZero) {
    const auto r = eval_side(kUnit, all_minus(kUnit), 0, 2, 0, Side::Left, CostModel::Discrete);
    EXPECT_EQ(r.time, 0);
    EXPECT_FALSE(r.argmax_index.has_value());
}

TEST(EvalSide, SumsStartAtSubpathEnd) {
    // Vertex 0 is outside [1, 2], so its weight must not count.
    const auto inst = fixed_instance({0, 1, 2}, {100, 1, 1});
    EXPECT_EQ(eval_side(inst, all_minus(inst), 1, 2, 2, Side::Left, CostModel::Simplified).time, 2);
}

TEST(EvalSide, RejectsBadRanges) {
    const Scenario s = all_minus(kUnit);
    EXPECT_THROW(eval_side(kUnit, s, 0, 1, 2, Side::Left, CostModel::Discrete), InvalidInput);
    EXPECT_THROW(eval_side(kUnit, s, 0, 3, 1, Side::Left, CostModel::Discrete), InvalidInput);
    EXPECT_THROW(eval_side(kUnit, Scenario{{1, 1}}, 0, 1, 0, Side::Left, CostModel::Discrete),
                 InvalidInput);
}

TEST(EvalOneSink, Examples) {
    EXPECT_EQ(eval_one_sink(kUnit, all_minus(kUnit), 0, 2, 1, CostModel::Simplified), 2);
    EXPECT_EQ(eval_one_sink(kUnit, all_minus(kUnit), 1, 1, 1, CostModel::Simplified), 0);
    EXPECT_EQ(eval_one_sink(kPairs, all_minus(kPairs), 0, 2, 1, CostModel::Discrete), 1);
}

TEST(EvalPlan, Examples) {
    const Scenario s = all_minus(kUnit);
    const auto singletons = eval_plan(kUnit, s, Plan({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}}, 2),
                                      CostModel::Discrete);
    EXPECT_EQ(singletons.time, 0);
    EXPECT_EQ(singletons.dominant_part, 0);

    const auto one = eval_plan(kUnit, s, Plan({{0, 2, 1}}, 2), CostModel::Simplified);
    EXPECT_EQ(one.time, 2);
    EXPECT_EQ(one.dominant_part, 0);

    const auto two = eval_plan(kUnit, s, Plan({{0, 0, 0}, {1, 2, 1}}, 2), CostModel::Simplified);
    EXPECT_EQ(two.time, 2);
    EXPECT_EQ(two.dominant_part, 1);

    EXPECT_THROW(eval_plan(kUnit, s, Plan({{0, 1, 0}}, 1), CostModel::Simplified), InvalidInput);
}

TEST(EvalAllSinks, Examples) {
    EXPECT_EQ(eval_all_sinks(kUnit, all_minus(kUnit), 0, 2, CostModel::Simplified),
              (std::vector<Time>{3, 2, 3}));
    EXPECT_EQ(eval_all_sinks(kUnit, all_minus(kUnit), 1, 1, CostModel::Simplified),
              (std::vector<Time>{0}));
}

TEST(EvalAllSinks, MatchesPerSinkEvaluation) {
    Rng rng(11);
    for (int it = 0; it < 300; ++it) {
        const auto inst = random_instance(rng, 0, 15, 12, rng.uniform(1, 4), rng.uniform(1, 3));
        const Scenario s = all_plus(inst);
        const int lo = static_cast<int>(rng.uniform(0, inst.n()));
        const int hi = static_cast<int>(rng.uniform(lo, inst.n()));
        for (CostModel cm : {CostModel::Discrete, CostModel::Simplified}) {
            const auto all = eval_all_sinks(inst, s, lo, hi, cm);
            ASSERT_EQ(all.size(), static_cast<std::size_t>(hi - lo + 1));
            for (int t = lo; t <= hi; ++t)
                ASSERT_EQ(all[t - lo], eval_one_sink(inst, s, lo, hi, t, cm));
        }
    }
}

TEST(Simulation, SingleVertexGroupsDepartEachStep) {
    const auto inst = fixed_instance({0, 3}, {5, 1}, 2);
    Scenario s{{5, 1}};
    EXPECT_EQ(simulate_evacuation(inst, s, 0, 1, 1), 5);
    EXPECT_EQ(simulate_evacuation(inst, s, 1, 1, 1), 0);
}

TEST(Simulation, MatchesFormulaOnSmallInstances) {
    Rng rng(5);
    for (int it = 0; it < 200; ++it) {
        const auto inst = random_instance(rng, 0, 6, 10, rng.uniform(1, 3), rng.uniform(1, 2));
        const Scenario s = all_plus(inst);
        for (int t = 0; t <= inst.n(); ++t)
            ASSERT_EQ(simulate_evacuation(inst, s, 0, inst.n(), t),
                      eval_one_sink(inst, s, 0, inst.n(), t, CostModel::Discrete));
    }
}

TEST(EvalProperties, RaisingAWeightNeverHelps) {
    Rng rng(17);
    for (int it = 0; it < 200; ++it) {
        const auto inst = random_instance(rng, 1, 10, 8, rng.uniform(1, 3));
        Scenario s = all_minus(inst);
        const int t = static_cast<int>(rng.uniform(0, inst.n()));
        const int v = static_cast<int>(rng.uniform(0, inst.n()));
        for (CostModel cm : {CostModel::Discrete, CostModel::Simplified}) {
            const Time before = eval_one_sink(inst, s, 0, inst.n(), t, cm);
            Scenario raised = s;
            raised.weights[v] += 3;
            EXPECT_GE(eval_one_sink(inst, raised, 0, inst.n(), t, cm), before);
        }
    }
}

TEST(EvalProperties, SubpathNeverSlower) {
    Rng rng(19);
    for (int it = 0; it < 200; ++it) {
        const auto inst = random_instance(rng, 2, 10, 8, rng.uniform(1, 3));
        const Scenario s = all_plus(inst);
        const int t = static_cast<int>(rng.uniform(0, inst.n()));
        const int lo = static_cast<int>(rng.uniform(0, t));
        const int hi = static_cast<int>(rng.uniform(t, inst.n()));
        EXPECT_LE(eval_one_sink(inst, s, lo, hi, t, CostModel::Discrete),
                  eval_one_sink(inst, s, 0, inst.n(), t, CostModel::Discrete));
    }
}

TEST(EvalProperties, SinkCostIsUnimodal) {
    Rng rng(23);
    for (int it = 0; it < 300; ++it) {
        const auto inst = random_instance(rng, 0, 12, 9, rng.uniform(1, 3));
        for (CostModel cm : {CostModel::Discrete, CostModel::Simplified})
            EXPECT_TRUE(kevac::testing::is_quasi_convex(
                eval_all_sinks(inst, all_plus(inst), 0, inst.n(), cm)));
    }
}

TEST(EvalProperties, SimplifiedIsUnitCapacityPlusOne) {
    Rng rng(29);
    for (int it = 0; it < 200; ++it) {
        auto inst = random_instance(rng, 2, 10, 8, 1);
        const Scenario s = all_plus(inst);
        for (int t = 1; t < inst.n(); ++t)
            EXPECT_EQ(eval_one_sink(inst, s, 0, inst.n(), t, CostModel::Simplified),
                      eval_one_sink(inst, s, 0, inst.n(), t, CostModel::Discrete) + 1);
    }
}
