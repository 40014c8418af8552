#pragma once

#include <cstdint>

#include "marvel/dag.hpp"
#include "marvel/pdag.hpp"

namespace marvel {

struct SkeletonScore {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

/// Compares adjacencies only. An empty learned skeleton has precision 1
/// exactly when the truth is empty too; an empty truth has recall 1.
[[nodiscard]] SkeletonScore skeleton_metrics(const Pdag& learned, const Dag& truth);

/// 2 p r / (p + r), or 0 when either is 0.
[[nodiscard]] double f1_score(double precision, double recall);

struct RunMetrics {
    std::uint64_t n_tests = 0;
    double asc = 0.0;
    std::uint64_t max_cond = 0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    double wall_ms = 0.0;
    std::uint64_t warnings = 0;
};

}  // namespace marvel
