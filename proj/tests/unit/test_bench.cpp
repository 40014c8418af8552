#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "marvel/experiment.hpp"
#include "marvel/graph.hpp"
#include "marvel/metrics.hpp"
#include "marvel/pc.hpp"
#include "oracles.hpp"

namespace marvel {
namespace {

Dag chain3() { return Dag(3, {{0, 1}, {1, 2}}); }
Dag collider3() { return Dag(3, {{0, 2}, {1, 2}}); }

LearnResult pc_exact(const Dag& g) {
    DsepOracle o(g);
    const MbMap mb = total_conditioning(o, g.p());
    return pc_baseline(o, mb);
}

// ---------------------------------------------------------------------------
// Metrics

TEST(SkeletonMetrics, Examples) {
    const Dag truth(3, {{0, 1}, {1, 2}});
    const SkeletonScore same = skeleton_metrics(skeleton(truth), truth);
    EXPECT_EQ(same.precision, 1.0);
    EXPECT_EQ(same.recall, 1.0);
    EXPECT_EQ(same.f1, 1.0);

    Pdag half(3);
    half.set_undirected(1, 0);
    const SkeletonScore h = skeleton_metrics(half, truth);
    EXPECT_EQ(h.precision, 1.0);
    EXPECT_EQ(h.recall, 0.5);
    EXPECT_DOUBLE_EQ(h.f1, 2.0 / 3.0);

    const SkeletonScore empty = skeleton_metrics(Pdag(4), Dag(4));
    EXPECT_EQ(empty.precision, 1.0);
    EXPECT_EQ(empty.recall, 1.0);
    EXPECT_EQ(empty.f1, 1.0);

    const SkeletonScore missed = skeleton_metrics(Pdag(3), truth);
    EXPECT_EQ(missed.precision, 0.0);
    EXPECT_EQ(missed.f1, 0.0);

    EXPECT_THROW((void)skeleton_metrics(Pdag(2), truth), std::invalid_argument);
}

TEST(SkeletonMetrics, OrientationIsIgnored) {
    Pdag wrong(3);
    wrong.orient(1, 0);
    wrong.orient(2, 1);
    EXPECT_EQ(skeleton_metrics(wrong, chain3()).f1, 1.0);
}

TEST(F1, Formula) {
    EXPECT_DOUBLE_EQ(f1_score(0.5, 1.0), 2.0 / 3.0);
    EXPECT_EQ(f1_score(0.0, 1.0), 0.0);
    EXPECT_EQ(f1_score(1.0, 0.0), 0.0);
}

// ---------------------------------------------------------------------------
// PC baseline

TEST(PcBaseline, Examples) {
    const Pdag v = pc_exact(collider3()).essential;
    EXPECT_TRUE(v.is_directed(0, 2));
    EXPECT_TRUE(v.is_directed(1, 2));
    EXPECT_EQ(pc_exact(chain3()).essential, cpdag_bruteforce(chain3()));
    const LearnResult empty = pc_exact(Dag(5));
    EXPECT_EQ(empty.essential.num_adjacencies(), 0u);
    EXPECT_EQ(empty.tests.n_tests, 0u);
}

TEST(PcBaseline, RecoversEssentialGraph) {
    std::mt19937_64 rng(61);
    for (int rep = 0; rep < 150; ++rep) {
        const Dag g = testing::random_dag(rng, 2, 9);
        const LearnResult r = pc_exact(g);
        ASSERT_EQ(r.essential, cpdag_bruteforce(g)) << "rep " << rep;
        EXPECT_TRUE(r.warnings.empty());
    }
}

TEST(PcBaseline, StartsFromTheMoralGraph) {
    // With an exact oracle the first round can only test moral edges.
    const Dag g = fixed_indegree_dag(12, 3, RngSeed{5});
    DsepOracle o(g);
    const MbMap mb = total_conditioning(o, g.p());
    (void)o.take_stats();
    const LearnResult r = pc_baseline(o, mb);
    std::size_t moral = 0;
    for (Var x = 0; x < g.p(); ++x) moral += mb.mb(x).size();
    EXPECT_GE(r.tests.n_tests, moral / 2);
    EXPECT_EQ(r.tests, o.stats());
}

// ---------------------------------------------------------------------------
// Config parsing

TEST(Config, ParsesAllKeys) {
    std::istringstream in(R"(# comment
graph = erdos_renyi
p = 30
density = 0.25
algo = pc
oracle = fisher_z
n_per_p = 50   # trailing comment
seeds = 1..3, 10
alpha = 0.01
scm = wide
caches = off
timing = off
jobs = 2
)");
    const ExperimentConfig c = parse_config(in);
    EXPECT_EQ(c.graph, GraphModel::ErdosRenyi);
    EXPECT_EQ(c.p, 30);
    EXPECT_DOUBLE_EQ(*c.density, 0.25);
    EXPECT_EQ(c.algorithm, Algorithm::Pc);
    EXPECT_EQ(c.oracle, OracleKind::FisherZ);
    EXPECT_DOUBLE_EQ(*c.n_per_p, 50.0);
    EXPECT_EQ(c.seeds, (std::vector<std::uint64_t>{1, 2, 3, 10}));
    EXPECT_DOUBLE_EQ(*c.alpha, 0.01);
    EXPECT_DOUBLE_EQ(c.ranges.coeff_hi, 2.0);
    EXPECT_FALSE(c.use_caches);
    EXPECT_FALSE(c.timing);
    EXPECT_EQ(c.jobs, 2);
}

TEST(Config, RejectsInconsistentSettings) {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_config(in);
    };
    EXPECT_THROW((void)parse("oracle = fisher_z\n"), std::invalid_argument);
    EXPECT_THROW((void)parse("oracle = dsep\nn_samples = 100\n"), std::invalid_argument);
    EXPECT_THROW((void)parse("colour = blue\n"), std::invalid_argument);
    EXPECT_THROW((void)parse("p = ten\n"), std::invalid_argument);
    EXPECT_THROW((void)parse("seeds = 5..2\n"), std::invalid_argument);
    EXPECT_THROW((void)parse("graph = erdos_renyi\n"), std::invalid_argument);
    EXPECT_THROW((void)parse("delta_in = 30\np = 25\n"), std::invalid_argument);
    EXPECT_THROW((void)parse("just words\n"), std::invalid_argument);
    EXPECT_NO_THROW((void)parse("graph = cluster\nd = 2\np = 9\n"));
}

TEST(Config, SeedLists) {
    EXPECT_EQ(parse_seed_list("7"), (std::vector<std::uint64_t>{7}));
    EXPECT_EQ(parse_seed_list("1..3,3"), (std::vector<std::uint64_t>{1, 2, 3, 3}));
    EXPECT_THROW((void)parse_seed_list(""), std::invalid_argument);
    EXPECT_THROW((void)parse_seed_list("a"), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Experiments

ExperimentConfig oracle_config(Algorithm a) {
    ExperimentConfig c;
    c.p = 15;
    c.delta_in = 3;
    c.algorithm = a;
    c.seeds = {1, 2, 3};
    c.timing = false;
    return c;
}

TEST(Experiment, ExactRunsAreSoundAndComplete) {
    for (Algorithm a : {Algorithm::Marvel, Algorithm::Pc}) {
        const ExperimentTable t = run_experiment(oracle_config(a));
        ASSERT_EQ(t.rows.size(), 3u);
        for (const auto& r : t.rows) {
            EXPECT_EQ(r.metrics.f1, 1.0);
            EXPECT_EQ(r.mb_tests, 15u * 14u / 2u);
            EXPECT_EQ(r.n_samples, 0);
            EXPECT_EQ(r.metrics.warnings, 0u);
            EXPECT_LE(r.delta_in, 3);
        }
    }
}

TEST(Experiment, MarvelBudgetHoldsPerRow) {
    ExperimentConfig c = oracle_config(Algorithm::Marvel);
    c.p = 25;
    c.seeds = parse_seed_list("1..5");
    for (int d = 1; d <= 3; ++d) {
        c.delta_in = d;
        for (const auto& r : run_experiment(c).rows)
            EXPECT_LE(r.metrics.n_tests, ci_budget_bound(25, static_cast<std::uint64_t>(r.delta_in)));
    }
}

TEST(Experiment, CsvIsByteIdenticalAcrossRunsAndJobCounts) {
    ExperimentConfig c = oracle_config(Algorithm::Marvel);
    c.oracle = OracleKind::FisherZ;
    c.n_samples = 400;
    std::ostringstream a, b, par;
    write_csv(a, run_experiment(c));
    write_csv(b, run_experiment(c));
    c.jobs = 3;
    write_csv(par, run_experiment(c));
    EXPECT_EQ(a.str(), b.str());
    EXPECT_EQ(a.str(), par.str());
}

TEST(Experiment, CsvLayout) {
    const ExperimentTable t = run_experiment(oracle_config(Algorithm::Pc));
    std::ostringstream os;
    write_csv(os, t);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, kCsvHeader);
    int rows = 0;
    std::string last;
    while (std::getline(in, line)) {
        ++rows;
        last = line;
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), 14);
    }
    EXPECT_EQ(rows, 4);
    EXPECT_EQ(last.rfind("pc,mean,", 0), 0u);
}

TEST(Experiment, MeanRow) {
    ExperimentTable t;
    t.rows.resize(2);
    t.rows[0].metrics.f1 = 1.0;
    t.rows[1].metrics.f1 = 0.5;
    t.rows[0].mb_tests = 10;
    t.rows[1].mb_tests = 20;
    const auto m = t.mean();
    EXPECT_DOUBLE_EQ(m.f1, 0.75);
    EXPECT_DOUBLE_EQ(m.mb_tests, 15.0);
}

TEST(Experiment, ErrorsCarryTheSeed) {
    ExperimentConfig c;
    c.graph = GraphModel::File;
    c.graph_file = "/nonexistent/graph.edges";
    c.seeds = {4};
    try {
        (void)run_experiment(c);
        FAIL() << "expected an error";
    } catch (const std::runtime_error& e) {
        EXPECT_NE(std::string(e.what()).find("seed 4"), std::string::npos);
    }
}

TEST(Experiment, FiniteSampleRunIsReasonable) {
    ExperimentConfig c = oracle_config(Algorithm::Marvel);
    c.p = 20;
    c.oracle = OracleKind::FisherZ;
    c.n_per_p = 50;
    const ExperimentTable t = run_experiment(c);
    for (const auto& r : t.rows) EXPECT_EQ(r.n_samples, 1000);
    EXPECT_GT(t.mean().f1, 0.7);
}

}  // namespace
}  // namespace marvel
