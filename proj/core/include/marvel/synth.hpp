#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>

#include "marvel/dag.hpp"
#include "marvel/dataset.hpp"

namespace marvel {

/// Seed for the 64-bit Mersenne Twister behind every generator.
struct RngSeed {
    std::uint64_t value = 0;
};

/// Independent child seed for sub-stream `stream` (splitmix64 mixing).
[[nodiscard]] RngSeed derive_seed(RngSeed base, std::uint64_t stream);

/// Directed G(p, m): m skeleton edges chosen uniformly among the C(p, 2)
/// pairs, oriented along one uniformly random vertex order.
[[nodiscard]] Dag erdos_renyi_dag(int p, std::uint64_t m, RngSeed seed);

/// Random order; each vertex draws delta_in distinct potential parents
/// among the other vertices and keeps those that precede it.
[[nodiscard]] Dag fixed_indegree_dag(int p, int delta_in, RngSeed seed);

/// floor(p / (d + 1)) disjoint complete clusters of d + 1 vertices, each
/// oriented by index; leftover vertices stay isolated.
[[nodiscard]] Dag cluster_adversarial_dag(int p, int d);

/// Linear-Gaussian structural causal model over a DAG.
struct ScmSpec {
    Dag dag;
    std::map<Edge, double> coeffs;
    Eigen::VectorXd noise_sd;
};

struct ScmRanges {
    double coeff_lo = 0.5;
    double coeff_hi = 1.0;
    double sd_lo = 1.0;
    double sd_hi = 1.7320508075688772;  // sqrt(3)

    /// Coefficients +-[0.5, 1], noise sd in [1, sqrt 3].
    [[nodiscard]] static ScmRanges standard() { return {}; }
    /// Coefficients +-[0.5, 2], noise sd in [1, sqrt 2].
    [[nodiscard]] static ScmRanges wide() { return {0.5, 2.0, 1.0, 1.4142135623730951}; }
};

/// Coefficients uniform on [-hi, -lo] U [lo, hi] with a fair sign; noise
/// standard deviations uniform on [sd_lo, sd_hi].
[[nodiscard]] ScmSpec random_scm(const Dag& dag, const ScmRanges& ranges, RngSeed seed);

/// n x p samples drawn in topological order.
[[nodiscard]] Eigen::MatrixXd sample_values(const ScmSpec& spec, std::int64_t n, RngSeed seed);
[[nodiscard]] Dataset sample(const ScmSpec& spec, std::int64_t n, RngSeed seed);

/// (I - B)^-1 D (I - B)^-T for coefficient matrix B and noise variances D.
[[nodiscard]] Eigen::MatrixXd population_covariance(const ScmSpec& spec);
[[nodiscard]] Eigen::MatrixXd population_correlation(const ScmSpec& spec);

}  // namespace marvel
