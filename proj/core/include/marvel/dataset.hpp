#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>

#include "marvel/ci.hpp"
#include "marvel/var_set.hpp"

namespace marvel {

/// n samples of p real variables plus their sample correlation matrix.
class Dataset {
public:
    /// `values` is n x p. Throws NumericalError on a constant column.
    explicit Dataset(Eigen::MatrixXd values);

    /// Dataset known only through its correlation matrix, e.g. a population
    /// matrix, with a nominal sample size for the test statistic.
    static Dataset from_correlation(Eigen::MatrixXd corr, std::int64_t n);

    [[nodiscard]] std::int64_t n() const { return n_; }
    [[nodiscard]] int p() const { return static_cast<int>(corr_.rows()); }
    [[nodiscard]] const Eigen::MatrixXd& values() const { return values_; }
    [[nodiscard]] const Eigen::MatrixXd& corr() const { return corr_; }

private:
    Dataset() = default;

    std::int64_t n_ = 0;
    Eigen::MatrixXd values_;
    Eigen::MatrixXd corr_;
};

/// Headerless CSV, one sample per row, column index = variable index.
[[nodiscard]] Dataset read_csv(std::istream& in);
[[nodiscard]] Dataset read_csv(const std::filesystem::path& path);
void write_csv(std::ostream& out, const Eigen::MatrixXd& values);
void write_csv(const std::filesystem::path& path, const Eigen::MatrixXd& values);

/// |rho| is clamped to 1 - kRhoClamp before the log transform.
inline constexpr double kRhoClamp = 1e-7;

/// Partial correlation of x and y given s from the inverse of the
/// (|s|+2)-square correlation submatrix: rho = -P_xy / sqrt(P_xx P_yy).
/// Throws NumericalError when the submatrix is singular.
[[nodiscard]] double partial_correlation(const Dataset& d, Var x, Var y, const VarSet& s);

struct GaussianCiConfig {
    double alpha = 0.05;

    /// alpha = 2 / p^2.
    [[nodiscard]] static GaussianCiConfig for_dimension(int p);
};

/// Fisher z statistic sqrt(n - |s| - 3) * atanh(rho).
[[nodiscard]] double fisher_z(double rho, std::int64_t n, std::size_t cond_size);

/// Two-sided critical value Phi^-1(1 - alpha / 2).
[[nodiscard]] double fisher_z_threshold(double alpha);

/// Fisher-z partial-correlation test. Independent iff |z| <= threshold.
///
/// Queries whose conditioning set leaves n <= |s| + 3 cannot be tested; they
/// are answered "dependent" and counted in degenerate().
class FisherZOracle final : public CiOracle {
public:
    FisherZOracle(std::shared_ptr<const Dataset> data, GaussianCiConfig cfg);

    [[nodiscard]] int p() const override { return data_->p(); }
    [[nodiscard]] std::uint64_t degenerate() const { return degenerate_; }
    [[nodiscard]] double threshold() const { return threshold_; }
    [[nodiscard]] const GaussianCiConfig& config() const { return cfg_; }

protected:
    bool independent(Var x, Var y, const VarSet& s) override;

private:
    std::shared_ptr<const Dataset> data_;
    GaussianCiConfig cfg_;
    double threshold_;
    std::uint64_t degenerate_ = 0;
};

}  // namespace marvel
