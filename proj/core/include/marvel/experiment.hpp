#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "marvel/metrics.hpp"
#include "marvel/synth.hpp"

namespace marvel {

enum class GraphModel { FixedIndegree, ErdosRenyi, Cluster, File };
enum class Algorithm { Marvel, Pc };
enum class OracleKind { Dsep, FisherZ };

[[nodiscard]] std::string to_string(GraphModel m);
[[nodiscard]] std::string to_string(Algorithm a);
[[nodiscard]] std::string to_string(OracleKind o);
[[nodiscard]] Algorithm parse_algorithm(const std::string& s);
[[nodiscard]] OracleKind parse_oracle(const std::string& s);
[[nodiscard]] GraphModel parse_graph_model(const std::string& s);

/// One experiment: a graph family, a learner, an oracle kind and the seeds
/// to repeat it over.
///
/// Config files are flat `key = value` lines (`#` comments):
///
///   graph      fixed_indegree | erdos_renyi | cluster | file
///   p          vertex count (ignored for graph = file)
///   delta_in   in-degree for fixed_indegree
///   m          edge count for erdos_renyi (or give density)
///   density    m = round(density * C(p, 2)) for erdos_renyi
///   d          cluster in-degree for graph = cluster
///   graph_file edge-list path for graph = file
///   algo       marvel | pc
///   oracle     dsep | fisher_z
///   n_samples  sample count (fisher_z only)
///   n_per_p    alternative to n_samples: n = n_per_p * p
///   seeds      comma list with optional ranges, e.g. 1..20,42
///   alpha      test level (default 2 / p^2)
///   scm        standard | wide
///   caches     on | off
///   timing     on | off (off writes wall_ms as 0)
///   jobs       seeds run concurrently
struct ExperimentConfig {
    GraphModel graph = GraphModel::FixedIndegree;
    int p = 25;
    int delta_in = 3;
    std::optional<std::uint64_t> m;
    std::optional<double> density;
    int cluster_d = 1;
    std::filesystem::path graph_file;
    Algorithm algorithm = Algorithm::Marvel;
    OracleKind oracle = OracleKind::Dsep;
    std::optional<std::int64_t> n_samples;
    std::optional<double> n_per_p;
    std::vector<std::uint64_t> seeds{1};
    std::optional<double> alpha;
    ScmRanges ranges = ScmRanges::standard();
    bool use_caches = true;
    bool timing = true;
    int jobs = 1;

    /// Throws std::invalid_argument describing the first problem found.
    void validate() const;
};

[[nodiscard]] ExperimentConfig parse_config(std::istream& in);
[[nodiscard]] ExperimentConfig parse_config(const std::filesystem::path& path);
[[nodiscard]] std::vector<std::uint64_t> parse_seed_list(const std::string& text);

struct RunRow {
    Algorithm algorithm = Algorithm::Marvel;
    std::uint64_t seed = 0;
    int p = 0;
    int delta_in = 0;
    std::uint64_t m = 0;
    std::int64_t n_samples = 0;
    std::uint64_t mb_tests = 0;
    RunMetrics metrics;
};

struct ExperimentTable {
    std::vector<RunRow> rows;

    /// Column means over the rows.
    struct Mean {
        double p = 0, delta_in = 0, m = 0, n_samples = 0, mb_tests = 0, post_tests = 0, asc = 0,
               max_cond = 0, precision = 0, recall = 0, f1 = 0, wall_ms = 0, warnings = 0;
    };
    [[nodiscard]] Mean mean() const;
};

/// Runs a single seed: graph, optional data, oracle, total conditioning,
/// learner, metrics.
[[nodiscard]] RunRow run_single(const ExperimentConfig& cfg, std::uint64_t seed);

/// All seeds; rows come back in seed-list order whatever `jobs` is.
[[nodiscard]] ExperimentTable run_experiment(const ExperimentConfig& cfg);

inline constexpr const char* kCsvHeader =
    "algo,seed,p,delta_in,m,n_samples,mb_tests,post_tests,asc,max_cond,precision,recall,f1,"
    "wall_ms,warnings";

/// Header, one row per seed, then a `mean` row.
void write_csv(std::ostream& out, const ExperimentTable& table);
void write_csv_row(std::ostream& out, const RunRow& row);

}  // namespace marvel
