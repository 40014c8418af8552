#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "marvel/var_set.hpp"

namespace marvel {

using Edge = std::pair<Var, Var>;

/// Directed acyclic graph over variables 0..p-1.
///
/// Parent and child sets are kept as exact mirrors. Construction validates
/// indices, rejects self-loops, duplicate edges are merged, and a cycle
/// raises std::invalid_argument. Instances are immutable afterwards.
class Dag {
public:
    Dag() = default;
    explicit Dag(int p);
    Dag(int p, const std::vector<Edge>& edges);

    [[nodiscard]] int p() const { return p_; }
    [[nodiscard]] const VarSet& parents(Var v) const { return parents_.at(check(v)); }
    [[nodiscard]] const VarSet& children(Var v) const { return children_.at(check(v)); }
    /// Parents and children together.
    [[nodiscard]] VarSet neighbors(Var v) const;

    [[nodiscard]] bool has_edge(Var from, Var to) const;
    [[nodiscard]] bool adjacent(Var a, Var b) const { return has_edge(a, b) || has_edge(b, a); }

    /// All edges in ascending (from, to) order.
    [[nodiscard]] std::vector<Edge> edges() const;
    [[nodiscard]] std::size_t num_edges() const;

    [[nodiscard]] int max_in_degree() const;
    [[nodiscard]] int max_degree() const;

    /// Kahn order, smallest available index first.
    [[nodiscard]] std::vector<Var> topological_order() const;

    /// Same index space with every edge touching `removed` dropped, which
    /// leaves those vertices isolated. d-separation among the remaining
    /// vertices equals that of the induced subgraph.
    [[nodiscard]] Dag without(const VarSet& removed) const;

    friend bool operator==(const Dag&, const Dag&) = default;

private:
    Var check(Var v) const;

    int p_ = 0;
    std::vector<VarSet> parents_;
    std::vector<VarSet> children_;
};

/// `{0->1, 1->2}` style.
std::ostream& operator<<(std::ostream& os, const Dag& g);

}  // namespace marvel
