#include <gtest/gtest.h>

#include <sstream>

#include "kevac/evac.hpp"
#include "kevac/optk.hpp"
#include "kevac/oracle.hpp"
#include "kevac/regret.hpp"
#include "kevac/scenario_gen.hpp"
#include "support.hpp"

using namespace kevac;
using kevac::testing::make_instance;
using kevac::testing::random_instance;

namespace {

const PathInstance kTwo = make_instance({0, 1}, {1, 1}, {2, 2});
const PathInstance kThree = make_instance({0, 1, 2}, {1, 1, 1}, {3, 3, 3});

Scenario mixed(const PathInstance& inst, int plus_lo, int plus_hi) {
    Scenario s = all_minus(inst);
    for (int v = plus_lo; v <= plus_hi; ++v) s.weights[v] = inst.wplus[v];
    return s;
}

}  // namespace

TEST(RegretOfPlan, Examples) {
    const Plan sink0({{0, 1, 0}}, 1);
    EXPECT_EQ(regret_of_plan(kTwo, sink0, Scenario{{1, 2}}), 1);

    const auto opt = optimal_k_sink(kTwo, all_plus(kTwo), 1, CostModel::Simplified);
    EXPECT_EQ(regret_of_plan(kTwo, opt.plan, all_plus(kTwo)), 0);
}

TEST(MaxRegretOfPlan, Examples) {
    ScenarioOptCache cache(kTwo, 1);
    const auto mr = max_regret_of_plan(kTwo, Plan({{0, 1, 0}}, 1), cache);
    EXPECT_EQ(mr.value, 1);
    EXPECT_EQ(mr.witness, (ScenarioDescriptor{1, 2}));
    EXPECT_EQ(max_regret_of_plan(kTwo, Plan({{0, 1, 1}}, 1), cache).value, 1);

    ScenarioOptCache cache2(kTwo, 2);
    EXPECT_EQ(max_regret_of_plan(kTwo, Plan({{0, 0, 0}, {1, 1, 1}}, 1), cache2).value, 0);

    EXPECT_THROW(max_regret_of_plan(kTwo, Plan({{0, 1, 0}}, 1), cache2), InvalidInput);
}

TEST(ScenarioOptCacheTest, SharesAllMinusAndChecksRanges) {
    ScenarioOptCache cache(kThree, 1);
    EXPECT_THROW(cache.at({0, 2}), InvalidInput);
    EXPECT_FALSE(cache.find({0, 2}).has_value());
    EXPECT_EQ(cache.get({1, 1}), cache.get({3, 3}));
    EXPECT_EQ(cache.computed(), 1u);
    EXPECT_THROW(cache.get({2, 1}), InvalidInput);
    EXPECT_THROW(cache.get({0, 4}), InvalidInput);
    EXPECT_THROW(ScenarioOptCache(kThree, 4), InvalidInput);
}

TEST(ScenarioOptCacheTest, DumpLoadRoundTrip) {
    ScenarioOptCache cache(kThree, 2);
    cache.fill_all();
    std::stringstream buf;
    cache.dump(buf);
    const auto back = ScenarioOptCache::load(buf, kThree);
    for (const auto d : enumerate_global_candidates(kThree)) EXPECT_EQ(back.at(d), cache.at(d));

    std::stringstream junk("not a cache");
    EXPECT_THROW(ScenarioOptCache::load(junk, kThree), InvalidInput);
}

TEST(LookupTables, ExampleAndRanges) {
    const auto t = EvacLookupTables::build(kThree);
    EXPECT_EQ(t.right(0, 1, 2), 7);
    EXPECT_THROW(t.right(0, 3, 2), InvalidInput);
    EXPECT_THROW(t.right(1, 1, 2), InvalidInput);
    EXPECT_THROW(t.left(0, 2, 2), InvalidInput);
    EXPECT_THROW(t.left_minus(2, 1), InvalidInput);
    EXPECT_EQ(t.left_minus(1, 1), 0);
    EXPECT_EQ(t.right_minus(2, 2), 0);
}

TEST(LookupTables, MatchDirectEvaluation) {
    Rng rng(21);
    for (int it = 0; it < 60; ++it) {
        const auto inst = random_instance(rng, 0, 12, 9, 1, rng.uniform(1, 3), 20);
        const auto t = EvacLookupTables::build(inst, {true});
        EXPECT_EQ(t.fallbacks(), 0u);
        const int n = inst.n();
        constexpr auto cm = CostModel::Simplified;
        for (int l = 0; l <= n; ++l) {
            for (int s = l; s <= n; ++s) {
                ASSERT_EQ(t.left_minus(l, s),
                          eval_side(inst, all_minus(inst), l, s, s, Side::Left, cm).time);
                ASSERT_EQ(t.right_minus(l, s),
                          eval_side(inst, all_minus(inst), l, s, l, Side::Right, cm).time);
                for (int m = l; m < s; ++m)
                    ASSERT_EQ(t.left(l, m, s),
                              eval_side(inst, mixed(inst, l, m), l, s, s, Side::Left, cm).time);
                for (int m = l + 1; m <= s; ++m)
                    ASSERT_EQ(t.right(l, m, s),
                              eval_side(inst, mixed(inst, m, s), l, s, l, Side::Right, cm).time);
            }
        }
    }
}

TEST(Rji, TwoVertexExample) {
    ScenarioOptCache cache(kTwo, 1);
    cache.fill_all();
    const auto rji = compute_rji(kTwo, cache, EvacLookupTables::build(kTwo));
    EXPECT_EQ(rji.R(0, 1), 1);
}

TEST(Rji, MatchesBruteForceWithMonotonicityAndUnimodality) {
    Rng rng(31);
    for (int it = 0; it < 40; ++it) {
        const auto inst = random_instance(rng, 0, 7, 8, 1, rng.uniform(1, 2), 15);
        const int n = inst.n();
        const int k = static_cast<int>(rng.uniform(1, std::min(3, n + 1)));
        ScenarioOptCache cache(inst, k);
        cache.fill_all();
        const auto tables = EvacLookupTables::build(inst);
        const auto rji = compute_rji(inst, cache, tables);
        const auto brute = brute_rji(inst, k);
        for (int j = 0; j <= n; ++j) {
            for (int i = j; i <= n; ++i) {
                ASSERT_EQ(rji.R(j, i), brute.R(j, i)) << "j=" << j << " i=" << i;
                const auto& per = brute.per_sink(j, i);
                ASSERT_EQ(per[rji.sink(j, i) - j], rji.R(j, i));
                EXPECT_TRUE(kevac::testing::is_quasi_convex(per));
                for (int t = j; t <= i; ++t)
                    ASSERT_EQ(sink_max_regret(tables, cache, j, i, t), per[t - j]);
                if (i < n) EXPECT_LE(rji.R(j, i), rji.R(j, i + 1));
                if (j > 0) EXPECT_LE(rji.R(j, i), rji.R(j - 1, i));
            }
        }
    }
}

TEST(Rji, DumpLoadRoundTrip) {
    ScenarioOptCache cache(kThree, 2);
    cache.fill_all();
    const auto rji = compute_rji(kThree, cache, EvacLookupTables::build(kThree));
    std::stringstream buf;
    rji.dump(buf);
    EXPECT_EQ(RjiMatrix::load(buf), rji);
}

TEST(Rji, RequiresSimplifiedCache) {
    ScenarioOptCache cache(kThree, 1, CostModel::Discrete);
    cache.fill_all();
    EXPECT_THROW(compute_rji(kThree, cache, EvacLookupTables::build(kThree)), InvalidInput);
}

TEST(MaxRegretOfPlan, StructuredEqualsCorners) {
    Rng rng(37);
    for (int it = 0; it < 60; ++it) {
        const auto inst = random_instance(rng, 1, 6, 6, 1, 1, 15);
        const int n = inst.n();
        const int cut = static_cast<int>(rng.uniform(0, n - 1));
        const Plan plan({{0, cut, static_cast<int>(rng.uniform(0, cut))},
                         {cut + 1, n, static_cast<int>(rng.uniform(cut + 1, n))}},
                        n);
        ScenarioOptCache cache(inst, 2);
        const auto mr = max_regret_of_plan(inst, plan, cache);
        EXPECT_EQ(mr.value, brute_max_regret_corners(inst, plan));
        EXPECT_EQ(mr.value, brute_max_regret_structured(inst, plan));
        EXPECT_EQ(regret_of_plan(inst, plan, mr.witness, cache), mr.value);
    }
}
