#include <benchmark/benchmark.h>

#include <memory>

#include "marvel/ci.hpp"
#include "marvel/dataset.hpp"
#include "marvel/graph.hpp"
#include "marvel/learner.hpp"
#include "marvel/mb.hpp"
#include "marvel/pc.hpp"
#include "marvel/synth.hpp"

namespace {

using namespace marvel;

// d-separation of the two lowest-index vertices given every fourth vertex.
void BM_DSeparation(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    const Dag g = fixed_indegree_dag(p, 3, RngSeed{1});
    VarSet s;
    for (Var v = 2; v < p; v += 4) s.insert(v);
    for (auto _ : state) benchmark::DoNotOptimize(d_separated(g, 0, 1, s));
}
BENCHMARK(BM_DSeparation)->RangeMultiplier(4)->Range(16, 1024);

void BM_SubsetEnumeration(benchmark::State& state) {
    const VarSet items = VarSet::range(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        std::size_t total = 0;
        for_each_subset(items, [&](const VarSet& s) {
            total += s.size();
            return false;
        });
        benchmark::DoNotOptimize(total);
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}
BENCHMARK(BM_SubsetEnumeration)->DenseRange(4, 16, 4);

void BM_PartialCorrelation(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const ScmSpec scm = random_scm(fixed_indegree_dag(40, 4, RngSeed{2}), ScmRanges::standard(), RngSeed{3});
    const Dataset d = sample(scm, 2000, RngSeed{4});
    VarSet s;
    for (Var v = 2; v < 2 + k; ++v) s.insert(v);
    for (auto _ : state) benchmark::DoNotOptimize(partial_correlation(d, 0, 1, s));
}
BENCHMARK(BM_PartialCorrelation)->DenseRange(0, 8, 2);

void BM_TotalConditioning(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    DsepOracle o(fixed_indegree_dag(p, 3, RngSeed{5}));
    for (auto _ : state) benchmark::DoNotOptimize(total_conditioning(o, p));
}
BENCHMARK(BM_TotalConditioning)->Arg(25)->Arg(50)->Arg(100);

template <bool Marvel>
void BM_LearnExact(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    const int d = static_cast<int>(state.range(1));
    DsepOracle o(fixed_indegree_dag(p, d, RngSeed{6}));
    const MbMap mb = total_conditioning(o, p);
    std::uint64_t tests = 0;
    for (auto _ : state) {
        (void)o.take_stats();
        const LearnResult r = Marvel ? marvel_learn(o, mb) : pc_baseline(o, mb);
        tests = r.tests.n_tests;
        benchmark::DoNotOptimize(r.essential);
    }
    state.counters["ci_tests"] = static_cast<double>(tests);
}
BENCHMARK(BM_LearnExact<true>)->Name("BM_MarvelExact")->ArgsProduct({{25, 50, 100}, {2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LearnExact<false>)->Name("BM_PcExact")->ArgsProduct({{25, 50}, {2, 4}})->Unit(benchmark::kMillisecond);

void BM_MarvelFisherZ(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    const Dag g = fixed_indegree_dag(p, 4, RngSeed{7});
    auto data = std::make_shared<const Dataset>(sample(random_scm(g, ScmRanges::standard(), RngSeed{8}), 50 * p, RngSeed{9}));
    FisherZOracle o(data, GaussianCiConfig::for_dimension(p));
    const MbMap mb = total_conditioning(o, p);
    for (auto _ : state) benchmark::DoNotOptimize(marvel_learn(o, mb).essential);
}
BENCHMARK(BM_MarvelFisherZ)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
