#include "marvel/metrics.hpp"

#include <stdexcept>

namespace marvel {

double f1_score(double precision, double recall) {
    if (precision <= 0.0 || recall <= 0.0) return 0.0;
    return 2.0 * precision * recall / (precision + recall);
}

SkeletonScore skeleton_metrics(const Pdag& learned, const Dag& truth) {
    if (learned.p() != truth.p())
        throw std::invalid_argument("skeleton_metrics: learned and true graphs differ in size");
    std::size_t hits = 0;
    std::size_t n_learned = 0;
    for (Var a = 0; a < truth.p(); ++a) {
        for (Var b = a + 1; b < truth.p(); ++b) {
            if (!learned.adjacent(a, b)) continue;
            ++n_learned;
            if (truth.adjacent(a, b)) ++hits;
        }
    }
    const std::size_t n_true = truth.num_edges();
    SkeletonScore s;
    s.precision = n_learned == 0 ? (n_true == 0 ? 1.0 : 0.0)
                                 : static_cast<double>(hits) / static_cast<double>(n_learned);
    s.recall = n_true == 0 ? 1.0 : static_cast<double>(hits) / static_cast<double>(n_true);
    s.f1 = f1_score(s.precision, s.recall);
    return s;
}

}  // namespace marvel
