#include "marvel/experiment.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <future>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "marvel/ci.hpp"
#include "marvel/dataset.hpp"
#include "marvel/graph_io.hpp"
#include "marvel/learner.hpp"
#include "marvel/mb.hpp"
#include "marvel/pc.hpp"

namespace marvel {

std::string to_string(GraphModel m) {
    switch (m) {
        case GraphModel::FixedIndegree: return "fixed_indegree";
        case GraphModel::ErdosRenyi: return "erdos_renyi";
        case GraphModel::Cluster: return "cluster";
        case GraphModel::File: return "file";
    }
    return "?";
}

std::string to_string(Algorithm a) { return a == Algorithm::Marvel ? "marvel" : "pc"; }

std::string to_string(OracleKind o) { return o == OracleKind::Dsep ? "dsep" : "fisher_z"; }

Algorithm parse_algorithm(const std::string& s) {
    if (s == "marvel") return Algorithm::Marvel;
    if (s == "pc") return Algorithm::Pc;
    throw std::invalid_argument("unknown algorithm '" + s + "' (expected marvel or pc)");
}

OracleKind parse_oracle(const std::string& s) {
    if (s == "dsep") return OracleKind::Dsep;
    if (s == "fisher_z") return OracleKind::FisherZ;
    throw std::invalid_argument("unknown oracle '" + s + "' (expected dsep or fisher_z)");
}

GraphModel parse_graph_model(const std::string& s) {
    if (s == "fixed_indegree") return GraphModel::FixedIndegree;
    if (s == "erdos_renyi") return GraphModel::ErdosRenyi;
    if (s == "cluster") return GraphModel::Cluster;
    if (s == "file") return GraphModel::File;
    throw std::invalid_argument("unknown graph model '" + s + "'");
}

void ExperimentConfig::validate() const {
    if (seeds.empty()) throw std::invalid_argument("config: no seeds");
    if (jobs < 1) throw std::invalid_argument("config: jobs must be >= 1");
    if (graph != GraphModel::File && p < 2) throw std::invalid_argument("config: p must be >= 2");
    if (graph == GraphModel::File && graph_file.empty())
        throw std::invalid_argument("config: graph = file needs graph_file");
    if (graph == GraphModel::FixedIndegree && (delta_in < 0 || delta_in >= p))
        throw std::invalid_argument("config: need 0 <= delta_in < p");
    if (graph == GraphModel::ErdosRenyi && !m && !density)
        throw std::invalid_argument("config: erdos_renyi needs m or density");
    if (density && (*density < 0.0 || *density > 1.0))
        throw std::invalid_argument("config: density must lie in [0, 1]");
    if (graph == GraphModel::Cluster && (cluster_d < 0 || cluster_d + 1 > p))
        throw std::invalid_argument("config: cluster needs 0 <= d < p");
    const bool sampled = n_samples.has_value() || n_per_p.has_value();
    if (oracle == OracleKind::FisherZ && !sampled)
        throw std::invalid_argument("config: fisher_z runs need n_samples or n_per_p");
    if (oracle == OracleKind::Dsep && sampled)
        throw std::invalid_argument("config: dsep runs take no sample size");
    if (n_samples && *n_samples < 2) throw std::invalid_argument("config: n_samples must be >= 2");
    if (n_per_p && !(*n_per_p > 0.0)) throw std::invalid_argument("config: n_per_p must be > 0");
    if (alpha && !(*alpha > 0.0 && *alpha < 1.0))
        throw std::invalid_argument("config: alpha must lie in (0, 1)");
    if (alpha && oracle == OracleKind::Dsep)
        throw std::invalid_argument("config: alpha applies to fisher_z runs only");
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
    T v{};
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw std::invalid_argument("config: bad value for " + key + ": '" + text + "'");
    return v;
}

bool parse_switch(const std::string& key, const std::string& v) {
    if (v == "on" || v == "true" || v == "1") return true;
    if (v == "off" || v == "false" || v == "0") return false;
    throw std::invalid_argument("config: " + key + " must be on or off");
}

}  // namespace

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        item = trim(item);
        if (item.empty()) continue;
        if (const auto dots = item.find(".."); dots != std::string::npos) {
            const auto lo = parse_number<std::uint64_t>("seeds", trim(item.substr(0, dots)));
            const auto hi = parse_number<std::uint64_t>("seeds", trim(item.substr(dots + 2)));
            if (hi < lo) throw std::invalid_argument("config: empty seed range " + item);
            for (std::uint64_t s = lo; s <= hi; ++s) out.push_back(s);
        } else {
            out.push_back(parse_number<std::uint64_t>("seeds", item));
        }
    }
    if (out.empty()) throw std::invalid_argument("config: no seeds");
    return out;
}

ExperimentConfig parse_config(std::istream& in) {
    ExperimentConfig cfg;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "graph") cfg.graph = parse_graph_model(value);
        else if (key == "p") cfg.p = parse_number<int>(key, value);
        else if (key == "delta_in") cfg.delta_in = parse_number<int>(key, value);
        else if (key == "m") cfg.m = parse_number<std::uint64_t>(key, value);
        else if (key == "density") cfg.density = parse_number<double>(key, value);
        else if (key == "d") cfg.cluster_d = parse_number<int>(key, value);
        else if (key == "graph_file") cfg.graph_file = value;
        else if (key == "algo") cfg.algorithm = parse_algorithm(value);
        else if (key == "oracle") cfg.oracle = parse_oracle(value);
        else if (key == "n_samples") cfg.n_samples = parse_number<std::int64_t>(key, value);
        else if (key == "n_per_p") cfg.n_per_p = parse_number<double>(key, value);
        else if (key == "seeds") cfg.seeds = parse_seed_list(value);
        else if (key == "alpha") cfg.alpha = parse_number<double>(key, value);
        else if (key == "scm") {
            if (value == "standard") cfg.ranges = ScmRanges::standard();
            else if (value == "wide") cfg.ranges = ScmRanges::wide();
            else throw std::invalid_argument("config: scm must be standard or wide");
        }
        else if (key == "caches") cfg.use_caches = parse_switch(key, value);
        else if (key == "timing") cfg.timing = parse_switch(key, value);
        else if (key == "jobs") cfg.jobs = parse_number<int>(key, value);
        else
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": unknown key '" + key + "'");
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig parse_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path.string());
    return parse_config(in);
}

namespace {

// Sub-streams of a seed.
constexpr std::uint64_t kGraphStream = 0;
constexpr std::uint64_t kScmStream = 1;
constexpr std::uint64_t kSampleStream = 2;

Dag make_graph(const ExperimentConfig& cfg, std::uint64_t seed) {
    const RngSeed s = derive_seed({seed}, kGraphStream);
    switch (cfg.graph) {
        case GraphModel::FixedIndegree: return fixed_indegree_dag(cfg.p, cfg.delta_in, s);
        case GraphModel::ErdosRenyi: {
            std::uint64_t m = cfg.m.value_or(0);
            if (!cfg.m) {
                const double pairs = cfg.p * (cfg.p - 1) / 2.0;
                m = static_cast<std::uint64_t>(std::llround(*cfg.density * pairs));
            }
            return erdos_renyi_dag(cfg.p, m, s);
        }
        case GraphModel::Cluster: return cluster_adversarial_dag(cfg.p, cfg.cluster_d);
        case GraphModel::File: return read_dag(cfg.graph_file);
    }
    throw std::logic_error("unreachable graph model");
}

}  // namespace

RunRow run_single(const ExperimentConfig& cfg, std::uint64_t seed) {
    try {
        const Dag truth = make_graph(cfg, seed);
        const int p = truth.p();
        if (p < 2) throw std::invalid_argument("graph needs at least two vertices");

        std::unique_ptr<CiOracle> oracle;
        std::int64_t n = 0;
        if (cfg.oracle == OracleKind::Dsep) {
            oracle = std::make_unique<DsepOracle>(truth);
        } else {
            n = cfg.n_samples ? *cfg.n_samples
                              : static_cast<std::int64_t>(std::llround(*cfg.n_per_p * p));
            const ScmSpec scm = random_scm(truth, cfg.ranges, derive_seed({seed}, kScmStream));
            auto data = std::make_shared<const Dataset>(
                sample(scm, n, derive_seed({seed}, kSampleStream)));
            const GaussianCiConfig ci = cfg.alpha ? GaussianCiConfig{*cfg.alpha}
                                                  : GaussianCiConfig::for_dimension(p);
            oracle = std::make_unique<FisherZOracle>(std::move(data), ci);
        }

        const MbMap mb0 = total_conditioning(*oracle, p);
        const CiStats mb_stats = oracle->take_stats();

        const auto start = std::chrono::steady_clock::now();
        const LearnResult learned = cfg.algorithm == Algorithm::Marvel
                                        ? marvel_learn(*oracle, mb0, {cfg.use_caches})
                                        : pc_baseline(*oracle, mb0);
        const auto stop = std::chrono::steady_clock::now();
        const CiStats& post = oracle->stats();

        RunRow row;
        row.algorithm = cfg.algorithm;
        row.seed = seed;
        row.p = p;
        row.delta_in = truth.max_in_degree();
        row.m = truth.num_edges();
        row.n_samples = n;
        row.mb_tests = mb_stats.n_tests;
        const SkeletonScore score = skeleton_metrics(learned.essential, truth);
        row.metrics.n_tests = post.n_tests;
        row.metrics.asc = post.asc();
        row.metrics.max_cond = post.max_cond_size;
        row.metrics.precision = score.precision;
        row.metrics.recall = score.recall;
        row.metrics.f1 = score.f1;
        row.metrics.wall_ms =
            cfg.timing ? std::chrono::duration<double, std::milli>(stop - start).count() : 0.0;
        row.metrics.warnings = learned.warnings.size();
        return row;
    } catch (const std::exception& e) {
        throw std::runtime_error("seed " + std::to_string(seed) + ": " + e.what());
    }
}

ExperimentTable run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    ExperimentTable table;
    table.rows.resize(cfg.seeds.size());
    if (cfg.jobs == 1) {
        for (std::size_t i = 0; i < cfg.seeds.size(); ++i) table.rows[i] = run_single(cfg, cfg.seeds[i]);
        return table;
    }
    const auto jobs = static_cast<std::size_t>(cfg.jobs);
    for (std::size_t first = 0; first < cfg.seeds.size(); first += jobs) {
        std::vector<std::future<RunRow>> batch;
        const std::size_t last = std::min(first + jobs, cfg.seeds.size());
        for (std::size_t i = first; i < last; ++i)
            batch.push_back(std::async(std::launch::async, run_single, std::cref(cfg), cfg.seeds[i]));
        for (std::size_t i = first; i < last; ++i) table.rows[i] = batch[i - first].get();
    }
    return table;
}

ExperimentTable::Mean ExperimentTable::mean() const {
    Mean m;
    if (rows.empty()) return m;
    for (const auto& r : rows) {
        m.p += r.p;
        m.delta_in += r.delta_in;
        m.m += static_cast<double>(r.m);
        m.n_samples += static_cast<double>(r.n_samples);
        m.mb_tests += static_cast<double>(r.mb_tests);
        m.post_tests += static_cast<double>(r.metrics.n_tests);
        m.asc += r.metrics.asc;
        m.max_cond += static_cast<double>(r.metrics.max_cond);
        m.precision += r.metrics.precision;
        m.recall += r.metrics.recall;
        m.f1 += r.metrics.f1;
        m.wall_ms += r.metrics.wall_ms;
        m.warnings += static_cast<double>(r.metrics.warnings);
    }
    const double k = static_cast<double>(rows.size());
    for (double* f : {&m.p, &m.delta_in, &m.m, &m.n_samples, &m.mb_tests, &m.post_tests, &m.asc,
                      &m.max_cond, &m.precision, &m.recall, &m.f1, &m.wall_ms, &m.warnings})
        *f /= k;
    return m;
}

namespace {

std::string fmt(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace

void write_csv_row(std::ostream& out, const RunRow& r) {
    out << to_string(r.algorithm) << ',' << r.seed << ',' << r.p << ',' << r.delta_in << ','
        << r.m << ',' << r.n_samples << ',' << r.mb_tests << ',' << r.metrics.n_tests << ','
        << fmt(r.metrics.asc) << ',' << r.metrics.max_cond << ',' << fmt(r.metrics.precision)
        << ',' << fmt(r.metrics.recall) << ',' << fmt(r.metrics.f1) << ','
        << fmt(r.metrics.wall_ms) << ',' << r.metrics.warnings << '\n';
}

void write_csv(std::ostream& out, const ExperimentTable& table) {
    out << kCsvHeader << '\n';
    for (const auto& r : table.rows) write_csv_row(out, r);
    if (table.rows.empty()) return;
    const auto m = table.mean();
    out << to_string(table.rows.front().algorithm) << ",mean," << fmt(m.p) << ','
        << fmt(m.delta_in) << ',' << fmt(m.m) << ',' << fmt(m.n_samples) << ','
        << fmt(m.mb_tests) << ',' << fmt(m.post_tests) << ',' << fmt(m.asc) << ','
        << fmt(m.max_cond) << ',' << fmt(m.precision) << ',' << fmt(m.recall) << ','
        << fmt(m.f1) << ',' << fmt(m.wall_ms) << ',' << fmt(m.warnings) << '\n';
}

}  // namespace marvel
