#include "marvel/pc.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "marvel/graph.hpp"

namespace marvel {

LearnResult pc_baseline(CiOracle& oracle, const MbMap& mb0) {
    const int p = mb0.p();
    if (p != oracle.p()) throw std::invalid_argument("pc_baseline: oracle and Mb sizes differ");
    if (!mb0.consistent())
        throw std::invalid_argument("pc_baseline: initial Markov boundaries are not symmetric");

    MemoizedOracle tests(oracle, /*memoize=*/false);
    LearnResult result;
    Pdag g(p);
    for (Var x = 0; x < p; ++x)
        for (Var y : mb0.mb(x)) g.add_undirected(x, y);

    std::map<Edge, VarSet> sepsets;
    for (int level = 0;; ++level) {
        bool any_candidate = false;
        for (Var x = 0; x < p; ++x) {
            for (Var y : g.adjacents(x)) {
                if (!g.adjacent(x, y)) continue;
                const VarSet candidates = g.adjacents(x).without(y);
                if (candidates.size() < static_cast<std::size_t>(level)) continue;
                any_candidate = true;
                for_each_subset_of_size(candidates, level, [&](const VarSet& s) {
                    if (!tests.query(x, y, s)) return false;
                    g.remove_edge(x, y);
                    sepsets[{std::min(x, y), std::max(x, y)}] = s;
                    return true;
                });
            }
        }
        if (!any_candidate) break;
    }

    std::size_t clashes = 0;
    for (Var c = 0; c < p; ++c) {
        const VarSet adj = g.adjacents(c);
        for (std::size_t i = 0; i < adj.size(); ++i) {
            for (std::size_t j = i + 1; j < adj.size(); ++j) {
                const Var a = adj[i];
                const Var b = adj[j];
                if (g.adjacent(a, b)) continue;
                // Pairs that were never adjacent share no child.
                const auto it = sepsets.find({a, b});
                if (it == sepsets.end() || it->second.contains(c)) continue;
                for (Var end : {a, b}) {
                    if (g.is_directed(c, end))
                        ++clashes;
                    else
                        g.orient(end, c);
                }
            }
        }
    }
    if (clashes > 0)
        result.warnings.push_back(std::to_string(clashes) +
                                  " v-structure orientation(s) contradicted earlier ones");

    MeekOutcome completed = meek_complete(g);
    if (completed.conflicts > 0)
        result.warnings.push_back("Meek completion left " + std::to_string(completed.conflicts) +
                                  " conflicting edge(s) undirected");
    result.essential = std::move(completed.graph);
    result.elimination_order.resize(static_cast<std::size_t>(p));
    std::iota(result.elimination_order.begin(), result.elimination_order.end(), 0);
    result.tests = tests.forwarded();
    return result;
}

}  // namespace marvel
