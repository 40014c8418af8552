#include "marvel/synth.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace marvel {

namespace {

using Rng = std::mt19937_64;

std::vector<Var> random_order(int p, Rng& rng) {
    std::vector<Var> order(static_cast<std::size_t>(p));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    return order;
}

std::vector<int> ranks_of(const std::vector<Var>& order) {
    std::vector<int> rank(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    return rank;
}

}  // namespace

RngSeed derive_seed(RngSeed base, std::uint64_t stream) {
    std::uint64_t z = base.value + (stream + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return {z ^ (z >> 31)};
}

Dag erdos_renyi_dag(int p, std::uint64_t m, RngSeed seed) {
    if (p < 0) throw std::invalid_argument("erdos_renyi_dag: negative p");
    const std::uint64_t pairs =
        static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(std::max(p - 1, 0)) / 2;
    if (m > pairs)
        throw std::invalid_argument("erdos_renyi_dag: m = " + std::to_string(m) + " exceeds " +
                                    std::to_string(pairs) + " vertex pairs");
    Rng rng(seed.value);
    std::vector<Edge> universe;
    universe.reserve(pairs);
    for (Var a = 0; a < p; ++a)
        for (Var b = a + 1; b < p; ++b) universe.emplace_back(a, b);
    // Partial Fisher-Yates: the first m slots become a uniform m-subset.
    for (std::uint64_t i = 0; i < m; ++i) {
        std::uniform_int_distribution<std::uint64_t> pick(i, pairs - 1);
        std::swap(universe[i], universe[pick(rng)]);
    }
    const auto rank = ranks_of(random_order(p, rng));
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        auto [a, b] = universe[i];
        if (rank[static_cast<std::size_t>(a)] > rank[static_cast<std::size_t>(b)]) std::swap(a, b);
        edges.emplace_back(a, b);
    }
    return Dag(p, edges);
}

Dag fixed_indegree_dag(int p, int delta_in, RngSeed seed) {
    if (p < 0) throw std::invalid_argument("fixed_indegree_dag: negative p");
    if (delta_in < 0 || (p > 0 && delta_in >= p))
        throw std::invalid_argument("fixed_indegree_dag: need 0 <= delta_in < p");
    Rng rng(seed.value);
    const auto rank = ranks_of(random_order(p, rng));
    std::vector<Edge> edges;
    std::vector<Var> others;
    for (Var v = 0; v < p; ++v) {
        others.clear();
        for (Var u = 0; u < p; ++u)
            if (u != v) others.push_back(u);
        for (int i = 0; i < delta_in; ++i) {
            std::uniform_int_distribution<std::size_t> pick(static_cast<std::size_t>(i),
                                                            others.size() - 1);
            std::swap(others[static_cast<std::size_t>(i)], others[pick(rng)]);
            const Var u = others[static_cast<std::size_t>(i)];
            if (rank[static_cast<std::size_t>(u)] < rank[static_cast<std::size_t>(v)])
                edges.emplace_back(u, v);
        }
    }
    return Dag(p, edges);
}

Dag cluster_adversarial_dag(int p, int d) {
    if (d < 0 || d + 1 > p) throw std::invalid_argument("cluster_adversarial_dag: need d + 1 <= p");
    const int size = d + 1;
    std::vector<Edge> edges;
    for (int start = 0; start + size <= p; start += size)
        for (Var a = start; a < start + size; ++a)
            for (Var b = a + 1; b < start + size; ++b) edges.emplace_back(a, b);
    return Dag(p, edges);
}

ScmSpec random_scm(const Dag& dag, const ScmRanges& r, RngSeed seed) {
    if (!(r.coeff_lo >= 0.0 && r.coeff_lo <= r.coeff_hi))
        throw std::invalid_argument("random_scm: need 0 <= coeff_lo <= coeff_hi");
    if (!(r.sd_lo > 0.0 && r.sd_lo <= r.sd_hi))
        throw std::invalid_argument("random_scm: need 0 < sd_lo <= sd_hi");
    Rng rng(seed.value);
    std::uniform_real_distribution<double> magnitude(r.coeff_lo, r.coeff_hi);
    std::bernoulli_distribution negative(0.5);
    std::uniform_real_distribution<double> sd(r.sd_lo, r.sd_hi);
    ScmSpec spec{dag, {}, Eigen::VectorXd(dag.p())};
    for (const auto& e : dag.edges()) {
        const double m = magnitude(rng);
        spec.coeffs.emplace(e, negative(rng) ? -m : m);
    }
    for (Var v = 0; v < dag.p(); ++v) spec.noise_sd(v) = sd(rng);
    return spec;
}

Eigen::MatrixXd sample_values(const ScmSpec& spec, std::int64_t n, RngSeed seed) {
    if (n < 1) throw std::invalid_argument("sample: need n >= 1");
    const int p = spec.dag.p();
    Rng rng(seed.value);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXd x(n, p);
    const auto order = spec.dag.topological_order();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Var v : order) {
            double value = spec.noise_sd(v) * gauss(rng);
            for (Var pa : spec.dag.parents(v)) value += spec.coeffs.at({pa, v}) * x(i, pa);
            x(i, v) = value;
        }
    }
    return x;
}

Dataset sample(const ScmSpec& spec, std::int64_t n, RngSeed seed) {
    return Dataset(sample_values(spec, n, seed));
}

Eigen::MatrixXd population_covariance(const ScmSpec& spec) {
    const int p = spec.dag.p();
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(p, p);  // b(child, parent)
    for (const auto& [e, c] : spec.coeffs) b(e.second, e.first) = c;
    const Eigen::MatrixXd a =
        (Eigen::MatrixXd::Identity(p, p) - b).inverse();
    const Eigen::VectorXd var = spec.noise_sd.array().square();
    return a * var.asDiagonal() * a.transpose();
}

Eigen::MatrixXd population_correlation(const ScmSpec& spec) {
    const Eigen::MatrixXd cov = population_covariance(spec);
    const Eigen::VectorXd inv_sd = cov.diagonal().cwiseSqrt().cwiseInverse();
    Eigen::MatrixXd corr = inv_sd.asDiagonal() * cov * inv_sd.asDiagonal();
    corr.diagonal().setOnes();
    return corr;
}

}  // namespace marvel
