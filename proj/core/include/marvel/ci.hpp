#pragma once

#include <cstdint>

#include "marvel/dag.hpp"
#include "marvel/var_set.hpp"

namespace marvel {

/// Running totals over the CI tests an oracle has answered.
struct CiStats {
    std::uint64_t n_tests = 0;
    std::uint64_t sum_cond_size = 0;
    std::uint64_t max_cond_size = 0;

    /// Average conditioning-set size; 0 when no test was performed.
    [[nodiscard]] double asc() const {
        return n_tests == 0 ? 0.0
                            : static_cast<double>(sum_cond_size) / static_cast<double>(n_tests);
    }

    void record(std::size_t cond_size) {
        ++n_tests;
        sum_cond_size += cond_size;
        if (cond_size > max_cond_size) max_cond_size = cond_size;
    }

    friend bool operator==(const CiStats&, const CiStats&) = default;
};

/// Conditional-independence query interface with mandatory accounting.
///
/// query() validates its arguments, counts the call exactly once and then
/// defers to the concrete test. Repeated identical queries are counted
/// every time; deduplication belongs to the caller.
class CiOracle {
public:
    virtual ~CiOracle() = default;

    /// True when x and y are judged independent given s.
    bool query(Var x, Var y, const VarSet& s);

    [[nodiscard]] const CiStats& stats() const { return stats_; }
    /// Returns the current totals and starts counting from zero.
    CiStats take_stats();

    [[nodiscard]] virtual int p() const = 0;

protected:
    virtual bool independent(Var x, Var y, const VarSet& s) = 0;

private:
    CiStats stats_;
};

/// Answers queries with d-separation in a known DAG.
class DsepOracle final : public CiOracle {
public:
    explicit DsepOracle(Dag g) : g_(std::move(g)) {}

    [[nodiscard]] int p() const override { return g_.p(); }
    [[nodiscard]] const Dag& graph() const { return g_; }

protected:
    bool independent(Var x, Var y, const VarSet& s) override;

private:
    Dag g_;
};

}  // namespace marvel
