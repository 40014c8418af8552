#include "marvel/mb.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "marvel/errors.hpp"
#include "marvel/graph.hpp"
#include "oracles.hpp"

namespace marvel {
namespace {

Dag collider3() { return Dag(3, {{0, 2}, {1, 2}}); }

Dag star(int p) {
    std::vector<Edge> e;
    for (Var z = 1; z < p; ++z) e.emplace_back(0, z);
    return Dag(p, e);
}

TEST(MbMap, LinkUnlinkRemove) {
    MbMap m(4);
    m.link(0, 1);
    m.link(1, 2);
    EXPECT_EQ(m.mb(1), (VarSet{0, 2}));
    EXPECT_TRUE(m.consistent());
    m.remove(1);
    EXPECT_TRUE(m.mb(0).empty());
    EXPECT_TRUE(m.mb(2).empty());
    EXPECT_EQ(m.remaining(), (VarSet{0, 2, 3}));
    EXPECT_THROW(m.remove(1), StateError);
    EXPECT_THROW(m.link(1, 3), StateError);
    EXPECT_THROW(m.link(2, 2), std::invalid_argument);
    EXPECT_THROW((void)m.mb(4), std::out_of_range);
}

TEST(MbMap, DumpsOneLinePerRemainingVariable) {
    MbMap m(3);
    m.link(0, 2);
    m.remove(1);
    std::ostringstream os;
    os << m;
    EXPECT_EQ(os.str(), "0: {2}\n2: {0}\n");
}

TEST(TotalConditioning, Collider) {
    DsepOracle o(collider3());
    const MbMap m = total_conditioning(o, 3);
    EXPECT_EQ(m.mb(0), (VarSet{1, 2}));
    EXPECT_EQ(m.mb(1), (VarSet{0, 2}));
    EXPECT_EQ(m.mb(2), (VarSet{0, 1}));
    EXPECT_EQ(o.stats().n_tests, 3u);
}

TEST(TotalConditioning, EmptyGraph) {
    DsepOracle o(Dag(4));
    const MbMap m = total_conditioning(o, 4);
    for (Var v = 0; v < 4; ++v) EXPECT_TRUE(m.mb(v).empty());
    EXPECT_EQ(o.stats().n_tests, 6u);
    // Every test conditions on the other p - 2 variables.
    EXPECT_EQ(o.stats().sum_cond_size, 12u);
}

TEST(TotalConditioning, Star) {
    const int p = 7;
    DsepOracle o(star(p));
    const MbMap m = total_conditioning(o, p);
    EXPECT_EQ(m.mb(0), VarSet::range(p).without(0));
    for (Var z = 1; z < p; ++z) EXPECT_EQ(m.mb(z), (VarSet{0}));
}

TEST(TotalConditioning, RejectsBadSizes) {
    DsepOracle o(Dag(3));
    EXPECT_THROW((void)total_conditioning(o, 4), std::invalid_argument);
    DsepOracle one(Dag(1));
    EXPECT_THROW((void)total_conditioning(one, 1), std::invalid_argument);
}

TEST(TotalConditioning, RecoversGraphicalBoundaries) {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 200; ++rep) {
        const Dag g = testing::random_dag(rng, 2, 10);
        DsepOracle o(g);
        const MbMap m = total_conditioning(o, g.p());
        ASSERT_TRUE(m.consistent());
        const auto p = static_cast<std::uint64_t>(g.p());
        EXPECT_EQ(o.stats().n_tests, p * (p - 1) / 2);
        for (Var v = 0; v < g.p(); ++v) EXPECT_EQ(m.mb(v), testing::mb_by_definition(g, v));
    }
}

TEST(UpdateAfterRemoval, ColliderSink) {
    DsepOracle o(collider3());
    MbMap m = total_conditioning(o, 3);
    (void)o.take_stats();
    update_after_removal(m, 2, {0, 1}, o);
    EXPECT_EQ(o.stats().n_tests, 1u);
    EXPECT_EQ(o.stats().sum_cond_size, 0u);
    EXPECT_TRUE(m.mb(0).empty());
    EXPECT_TRUE(m.mb(1).empty());
    EXPECT_TRUE(m.is_removed(2));
}

TEST(UpdateAfterRemoval, StarLeafNeedsNoTests) {
    DsepOracle o(star(5));
    MbMap m = total_conditioning(o, 5);
    (void)o.take_stats();
    update_after_removal(m, 3, {0}, o);
    EXPECT_EQ(o.stats().n_tests, 0u);
    EXPECT_EQ(m.mb(0), (VarSet{1, 2, 4}));
}

TEST(UpdateAfterRemoval, TriangleKeepsAdjacentPair) {
    DsepOracle o(Dag(3, {{0, 1}, {0, 2}, {1, 2}}));
    MbMap m = total_conditioning(o, 3);
    (void)o.take_stats();
    update_after_removal(m, 2, {0, 1}, o);
    EXPECT_EQ(o.stats().n_tests, 1u);
    EXPECT_EQ(m.mb(0), (VarSet{1}));
    EXPECT_EQ(m.mb(1), (VarSet{0}));
}

TEST(UpdateAfterRemoval, TwiceIsAStateError) {
    DsepOracle o(collider3());
    MbMap m = total_conditioning(o, 3);
    update_after_removal(m, 2, {0, 1}, o);
    EXPECT_THROW(update_after_removal(m, 2, {0, 1}, o), StateError);
}

TEST(UpdateAfterRemoval, ConditionsOnTheSmallerBoundary) {
    // 1 and 2 are both parents of 0 and 3; 2 also has an extra parent 4,
    // so Mb(1) is the smaller boundary.
    const Dag g(5, {{1, 0}, {2, 0}, {1, 3}, {2, 3}, {4, 2}});
    DsepOracle o(g);
    MbMap m = total_conditioning(o, 5);
    ASSERT_LT(m.mb(1).size(), m.mb(2).size());
    (void)o.take_stats();
    update_after_removal(m, 0, {1, 2}, o);
    // Mb(1) \ {0, 1, 2} = {3}; conditioning on the collider 3 keeps them linked.
    EXPECT_EQ(o.stats().n_tests, 1u);
    EXPECT_EQ(o.stats().sum_cond_size, 1u);
    EXPECT_TRUE(m.mb(1).contains(2));
}

// After removing a removable vertex, repaired boundaries must equal the
// boundaries of the reduced graph computed from scratch.
TEST(UpdateAfterRemoval, MatchesFreshTotalConditioning) {
    std::mt19937_64 rng(42);
    int removals = 0;
    for (int rep = 0; rep < 150; ++rep) {
        const Dag g = testing::random_dag(rng, 3, 9);
        DsepOracle o(g);
        const MbMap start = total_conditioning(o, g.p());
        for (Var x = 0; x < g.p(); ++x) {
            if (!is_removable_graphical(g, x)) continue;
            MbMap m = start;
            (void)o.take_stats();
            const VarSet n = g.neighbors(x);
            update_after_removal(m, x, n, o);
            EXPECT_LE(o.stats().n_tests, n.size() * (n.size() - (n.empty() ? 0 : 1)) / 2);
            ASSERT_TRUE(m.consistent());
            DsepOracle fresh(g.without({x}));
            const MbMap expected = total_conditioning(fresh, VarSet::range(g.p()).without(x));
            ASSERT_EQ(m, expected) << "removed " << x;
            ++removals;
        }
    }
    EXPECT_GT(removals, 300);
}

}  // namespace
}  // namespace marvel
