// marvel_cli: generate graphs and data, learn essential graphs, run
// experiment configs and check Markov equivalence.
//
// Exit codes: 0 success, 1 bad arguments or input, 2 internal error.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "marvel/ci.hpp"
#include "marvel/dataset.hpp"
#include "marvel/errors.hpp"
#include "marvel/experiment.hpp"
#include "marvel/graph.hpp"
#include "marvel/graph_io.hpp"
#include "marvel/learner.hpp"
#include "marvel/mb.hpp"
#include "marvel/metrics.hpp"
#include "marvel/pc.hpp"
#include "marvel/synth.hpp"

namespace {

using namespace marvel;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct GenerateArgs {
    std::string model = "fixed_indegree";
    int p = 25;
    int delta_in = 3;
    std::optional<std::uint64_t> m;
    int d = 1;
    std::uint64_t seed = 1;
    std::string scm = "standard";
    std::int64_t samples = 0;
    std::string out;
    std::string data;
};

struct LearnArgs {
    std::string graph;
    std::string data;
    std::string truth;
    std::string algo = "marvel";
    std::string oracle;
    std::optional<double> alpha;
    bool caches = true;
    std::string out;
};

struct BenchArgs {
    std::string config;
    std::optional<int> jobs;
    std::optional<std::string> seeds;
    std::optional<std::string> algo;
    std::optional<double> alpha;
    std::string out;
};

struct CheckArgs {
    std::string pdag;
    std::string truth;
};

void write_to(const std::string& path, const auto& writer) {
    if (path.empty() || path == "-") {
        writer(std::cout);
        return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError("cannot open " + path + " for writing");
    writer(f);
}

int run_generate(const GenerateArgs& a) {
    const RngSeed seed{a.seed};
    Dag g;
    const GraphModel model = parse_graph_model(a.model);
    switch (model) {
        case GraphModel::FixedIndegree:
            g = fixed_indegree_dag(a.p, a.delta_in, derive_seed(seed, 0));
            break;
        case GraphModel::ErdosRenyi:
            if (!a.m) throw UsageError("--m is required for erdos_renyi");
            g = erdos_renyi_dag(a.p, *a.m, derive_seed(seed, 0));
            break;
        case GraphModel::Cluster:
            g = cluster_adversarial_dag(a.p, a.d);
            break;
        case GraphModel::File:
            throw UsageError("generate cannot use graph model 'file'");
    }
    write_to(a.out, [&](std::ostream& os) { write_dag(os, g); });

    if (a.samples > 0) {
        if (a.data.empty()) throw UsageError("--samples needs --data");
        const ScmRanges ranges = a.scm == "wide" ? ScmRanges::wide() : ScmRanges::standard();
        if (a.scm != "wide" && a.scm != "standard") throw UsageError("unknown --scm " + a.scm);
        const ScmSpec scm = random_scm(g, ranges, derive_seed(seed, 1));
        write_csv(std::filesystem::path(a.data), sample_values(scm, a.samples, derive_seed(seed, 2)));
    }
    return 0;
}

int run_learn(const LearnArgs& a) {
    if (a.graph.empty() == a.data.empty()) throw UsageError("give exactly one of --graph and --data");
    const Algorithm algo = parse_algorithm(a.algo);
    const OracleKind kind = a.oracle.empty() ? (a.data.empty() ? OracleKind::Dsep : OracleKind::FisherZ)
                                             : parse_oracle(a.oracle);

    std::unique_ptr<CiOracle> oracle;
    std::optional<Dag> truth;
    if (!a.truth.empty()) truth = read_dag(std::filesystem::path(a.truth));
    if (kind == OracleKind::Dsep) {
        if (a.graph.empty()) throw UsageError("the dsep oracle needs --graph");
        if (a.alpha) throw UsageError("--alpha only applies to fisher_z");
        Dag g = read_dag(std::filesystem::path(a.graph));
        if (!truth) truth = g;
        oracle = std::make_unique<DsepOracle>(std::move(g));
    } else {
        if (a.data.empty()) throw UsageError("the fisher_z oracle needs --data");
        auto data = std::make_shared<const Dataset>(read_csv(std::filesystem::path(a.data)));
        GaussianCiConfig cfg = GaussianCiConfig::for_dimension(data->p());
        if (a.alpha) cfg.alpha = *a.alpha;
        if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) throw UsageError("--alpha must lie in (0, 1)");
        oracle = std::make_unique<FisherZOracle>(std::move(data), cfg);
    }
    if (truth && truth->p() != oracle->p())
        throw UsageError("--truth has " + std::to_string(truth->p()) + " vertices, data has " +
                         std::to_string(oracle->p()));

    const auto start = std::chrono::steady_clock::now();
    const MbMap mb = total_conditioning(*oracle, oracle->p());
    const CiStats mb_stats = oracle->take_stats();
    LearnOptions opts;
    opts.use_caches = a.caches;
    const LearnResult r = algo == Algorithm::Marvel ? marvel_learn(*oracle, mb, opts) : pc_baseline(*oracle, mb);
    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    write_to(a.out, [&](std::ostream& os) { write_pdag(os, r.essential); });

    std::ostream& log = a.out.empty() || a.out == "-" ? std::cerr : std::cout;
    log << "algo=" << to_string(algo) << " p=" << oracle->p() << " mb_tests=" << mb_stats.n_tests
        << " post_tests=" << r.tests.n_tests << " asc=" << r.tests.asc()
        << " max_cond=" << r.tests.max_cond_size << " wall_ms=" << wall_ms;
    if (truth) {
        const SkeletonScore s = skeleton_metrics(r.essential, *truth);
        log << " precision=" << s.precision << " recall=" << s.recall << " f1=" << s.f1
            << " equivalent=" << (markov_equivalent(*truth, r.essential) ? "true" : "false");
    }
    log << '\n';
    for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
    return 0;
}

int run_bench(const BenchArgs& a) {
    ExperimentConfig cfg = parse_config(std::filesystem::path(a.config));
    if (a.jobs) cfg.jobs = *a.jobs;
    if (a.seeds) cfg.seeds = parse_seed_list(*a.seeds);
    if (a.algo) cfg.algorithm = parse_algorithm(*a.algo);
    if (a.alpha) cfg.alpha = *a.alpha;
    cfg.validate();
    const ExperimentTable table = run_experiment(cfg);
    write_to(a.out, [&](std::ostream& os) { write_csv(os, table); });
    return 0;
}

int run_check(const CheckArgs& a) {
    const Pdag learned = read_pdag(std::filesystem::path(a.pdag));
    const Dag truth = read_dag(std::filesystem::path(a.truth));
    if (learned.p() != truth.p()) throw UsageError("vertex counts differ");
    std::cout << "equivalent: " << (markov_equivalent(truth, learned) ? "true" : "false") << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MARVEL causal structure learning"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    GenerateArgs gen;
    auto* g = app.add_subcommand("generate", "Write a random DAG and optionally samples from a linear SCM");
    g->add_option("--model", gen.model, "fixed_indegree | erdos_renyi | cluster")->capture_default_str();
    g->add_option("--p", gen.p, "Vertex count")->capture_default_str()->check(CLI::Range(1, 100000));
    g->add_option("--delta-in", gen.delta_in, "In-degree for fixed_indegree")->capture_default_str();
    g->add_option("--m", gen.m, "Edge count for erdos_renyi");
    g->add_option("--d", gen.d, "In-degree for cluster")->capture_default_str();
    g->add_option("--seed", gen.seed, "Base seed")->capture_default_str();
    g->add_option("--scm", gen.scm, "standard | wide")->capture_default_str();
    g->add_option("--samples", gen.samples, "Rows of data to draw")->check(CLI::NonNegativeNumber);
    g->add_option("--data", gen.data, "CSV output for the samples");
    g->add_option("--out", gen.out, "Edge-list output (stdout when omitted)");

    LearnArgs learn;
    auto* l = app.add_subcommand("learn", "Learn an essential graph from a DAG (oracle) or a CSV dataset");
    l->add_option("--graph", learn.graph, "DAG edge list answering d-separation queries");
    l->add_option("--data", learn.data, "Headerless CSV, one sample per row");
    l->add_option("--truth", learn.truth, "True DAG for metrics");
    l->add_option("--algo", learn.algo, "marvel | pc")->capture_default_str();
    l->add_option("--oracle", learn.oracle, "dsep | fisher_z (inferred from the input when omitted)");
    l->add_option("--alpha", learn.alpha, "Test level for fisher_z (default 2/p^2)");
    l->add_flag("!--no-caches", learn.caches, "Disable cross-iteration caches");
    l->add_option("--out", learn.out, "PDAG output (stdout when omitted)");

    BenchArgs bench;
    auto* b = app.add_subcommand("bench", "Run an experiment config and write CSV");
    b->add_option("--config", bench.config, "Config file")->required()->check(CLI::ExistingFile);
    b->add_option("--jobs", bench.jobs, "Seeds run concurrently")->check(CLI::PositiveNumber);
    b->add_option("--seed", bench.seeds, "Override the seed list, e.g. 1..20");
    b->add_option("--algo", bench.algo, "Override the learner");
    b->add_option("--alpha", bench.alpha, "Override the test level");
    b->add_option("--out", bench.out, "CSV output (stdout when omitted)");

    CheckArgs check;
    auto* c = app.add_subcommand("oracle-check", "Check a learned PDAG against a true DAG");
    c->add_option("--pdag", check.pdag, "Learned PDAG")->required();
    c->add_option("--truth", check.truth, "True DAG")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*g) return run_generate(gen);
        if (*l) return run_learn(learn);
        if (*b) return run_bench(bench);
        return run_check(check);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
}
