#include "marvel/ci.hpp"

#include <stdexcept>
#include <string>

#include "marvel/graph.hpp"

namespace marvel {

bool CiOracle::query(Var x, Var y, const VarSet& s) {
    const int n = p();
    auto in_range = [n](Var v) { return v >= 0 && v < n; };
    if (!in_range(x) || !in_range(y))
        throw std::out_of_range("CI query endpoint outside [0, " + std::to_string(n) + ")");
    for (Var v : s)
        if (!in_range(v))
            throw std::out_of_range("CI conditioning variable outside [0, " + std::to_string(n) +
                                    ")");
    if (x == y) throw std::invalid_argument("CI query needs two distinct variables");
    if (s.contains(x) || s.contains(y))
        throw std::invalid_argument("CI conditioning set contains an endpoint");
    stats_.record(s.size());
    return independent(x, y, s);
}

CiStats CiOracle::take_stats() {
    CiStats out = stats_;
    stats_ = {};
    return out;
}

bool DsepOracle::independent(Var x, Var y, const VarSet& s) { return d_separated(g_, x, y, s); }

}  // namespace marvel
