#include "marvel/dataset.hpp"

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "marvel/errors.hpp"

namespace marvel {

Dataset::Dataset(Eigen::MatrixXd values) : n_(values.rows()), values_(std::move(values)) {
    if (values_.cols() == 0) throw std::invalid_argument("Dataset: no variables");
    if (n_ < 2) throw std::invalid_argument("Dataset: need at least two samples");
    const Eigen::RowVectorXd mean = values_.colwise().mean();
    const Eigen::MatrixXd centered = values_.rowwise() - mean;
    const Eigen::MatrixXd cov = (centered.transpose() * centered) / static_cast<double>(n_ - 1);
    const Eigen::VectorXd sd = cov.diagonal().cwiseSqrt();
    for (Eigen::Index j = 0; j < sd.size(); ++j)
        if (!(sd(j) > 0.0))
            throw NumericalError("Dataset: column " + std::to_string(j) + " has zero variance");
    corr_ = sd.cwiseInverse().asDiagonal() * cov * sd.cwiseInverse().asDiagonal();
    corr_ = (0.5 * (corr_ + corr_.transpose())).cwiseMax(-1.0).cwiseMin(1.0);
    corr_.diagonal().setOnes();
}

Dataset Dataset::from_correlation(Eigen::MatrixXd corr, std::int64_t n) {
    if (corr.rows() != corr.cols() || corr.rows() == 0)
        throw std::invalid_argument("Dataset: correlation matrix must be square and non-empty");
    Dataset d;
    d.n_ = n;
    d.corr_ = std::move(corr);
    return d;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

Dataset read_csv(std::istream& in) {
    std::vector<double> flat;
    std::size_t cols = 0;
    std::size_t rows = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        std::size_t count = 0;
        std::string_view rest(line);
        while (true) {
            const auto comma = rest.find(',');
            const std::string_view cell = trim(rest.substr(0, comma));
            double v = 0.0;
            const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (cell.empty() || res.ec != std::errc{} || res.ptr != cell.data() + cell.size())
                throw std::invalid_argument("csv line " + std::to_string(line_no) +
                                            ": not a number: '" + std::string(cell) + "'");
            flat.push_back(v);
            ++count;
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        if (rows == 0) cols = count;
        if (count != cols)
            throw std::invalid_argument("csv line " + std::to_string(line_no) + ": expected " +
                                        std::to_string(cols) + " columns");
        ++rows;
    }
    Eigen::MatrixXd values(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                flat[r * cols + c];
    return Dataset(std::move(values));
}

Dataset read_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path.string());
    return read_csv(in);
}

void write_csv(std::ostream& out, const Eigen::MatrixXd& values) {
    char buf[64];
    for (Eigen::Index r = 0; r < values.rows(); ++r) {
        for (Eigen::Index c = 0; c < values.cols(); ++c) {
            if (c > 0) out << ',';
            const auto res = std::to_chars(buf, buf + sizeof buf, values(r, c));
            out.write(buf, res.ptr - buf);
        }
        out << '\n';
    }
}

void write_csv(const std::filesystem::path& path, const Eigen::MatrixXd& values) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path.string());
    write_csv(out, values);
}

double partial_correlation(const Dataset& d, Var x, Var y, const VarSet& s) {
    const int p = d.p();
    if (x < 0 || x >= p || y < 0 || y >= p) throw std::out_of_range("partial_correlation: index");
    if (x == y) throw std::invalid_argument("partial_correlation: x and y must differ");
    if (s.contains(x) || s.contains(y))
        throw std::invalid_argument("partial_correlation: conditioning set contains an endpoint");
    if (s.size() + 2 > static_cast<std::size_t>(p))
        throw std::invalid_argument("partial_correlation: conditioning set too large");

    const double lim = 1.0 - kRhoClamp;
    if (s.empty()) return std::clamp(d.corr()(x, y), -lim, lim);

    std::vector<Var> idx{x, y};
    idx.insert(idx.end(), s.begin(), s.end());
    const auto k = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXd sub(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j)
            sub(i, j) = d.corr()(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);

    Eigen::FullPivLU<Eigen::MatrixXd> lu(sub);
    if (!lu.isInvertible())
        throw NumericalError("partial_correlation: singular correlation submatrix");
    const Eigen::MatrixXd prec = lu.inverse();
    const double denom = std::sqrt(prec(0, 0) * prec(1, 1));
    if (!(denom > 0.0) || !std::isfinite(denom))
        throw NumericalError("partial_correlation: non-positive precision diagonal");
    return std::clamp(-prec(0, 1) / denom, -lim, lim);
}

GaussianCiConfig GaussianCiConfig::for_dimension(int p) {
    if (p < 2) throw std::invalid_argument("GaussianCiConfig: need p >= 2");
    return {2.0 / (static_cast<double>(p) * static_cast<double>(p))};
}

double fisher_z(double rho, std::int64_t n, std::size_t cond_size) {
    const double dof = static_cast<double>(n) - static_cast<double>(cond_size) - 3.0;
    return std::sqrt(dof) * 0.5 * std::log((1.0 + rho) / (1.0 - rho));
}

double fisher_z_threshold(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("alpha must lie strictly between 0 and 1");
    return boost::math::quantile(boost::math::normal_distribution<double>(), 1.0 - alpha / 2.0);
}

FisherZOracle::FisherZOracle(std::shared_ptr<const Dataset> data, GaussianCiConfig cfg)
    : data_(std::move(data)), cfg_(cfg), threshold_(fisher_z_threshold(cfg.alpha)) {
    if (!data_) throw std::invalid_argument("FisherZOracle: null dataset");
}

bool FisherZOracle::independent(Var x, Var y, const VarSet& s) {
    if (data_->n() <= static_cast<std::int64_t>(s.size()) + 3) {
        ++degenerate_;
        return false;
    }
    // Canonical endpoint order keeps the answer bit-identical under swapping.
    const double rho = partial_correlation(*data_, std::min(x, y), std::max(x, y), s);
    return std::abs(fisher_z(rho, data_->n(), s.size())) <= threshold_;
}

}  // namespace marvel
