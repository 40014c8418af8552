#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "marvel/dag.hpp"
#include "marvel/var_set.hpp"

namespace marvel {

/// Partially directed graph: every adjacent pair carries exactly one mark,
/// either a directed edge a->b or an undirected edge a-b.
///
/// The representation is a dense p x p mark matrix, which makes the
/// invariants (no pair both directed and undirected, no 2-cycles, no
/// self-loops) hold by construction.
class Pdag {
public:
    Pdag() = default;
    explicit Pdag(int p);

    /// Fully directed copy of a DAG.
    static Pdag from_dag(const Dag& g);

    [[nodiscard]] int p() const { return p_; }

    [[nodiscard]] bool adjacent(Var a, Var b) const { return mark(a, b) != Mark::None; }
    [[nodiscard]] bool is_directed(Var from, Var to) const { return mark(from, to) == Mark::Out; }
    [[nodiscard]] bool is_undirected(Var a, Var b) const { return mark(a, b) == Mark::Undirected; }

    /// Adds a-b unless a and b are already adjacent (existing marks win).
    /// Returns true iff an edge was added.
    bool add_undirected(Var a, Var b);
    /// Sets the pair to a->b, adding the adjacency if needed and overwriting
    /// any previous mark.
    void orient(Var from, Var to);
    /// Sets the pair to a-b, overwriting any previous mark.
    void set_undirected(Var a, Var b);
    void remove_edge(Var a, Var b);

    /// Ascending (from, to).
    [[nodiscard]] std::vector<Edge> directed_edges() const;
    /// Ascending pairs with first < second.
    [[nodiscard]] std::vector<Edge> undirected_edges() const;
    [[nodiscard]] std::size_t num_adjacencies() const;

    [[nodiscard]] VarSet adjacents(Var v) const;
    [[nodiscard]] VarSet parents(Var v) const;
    [[nodiscard]] VarSet children(Var v) const;
    [[nodiscard]] VarSet undirected_neighbors(Var v) const;

    friend bool operator==(const Pdag&, const Pdag&) = default;

private:
    enum class Mark : std::uint8_t { None = 0, Out = 1, In = 2, Undirected = 3 };

    [[nodiscard]] Mark mark(Var a, Var b) const;
    void set(Var a, Var b, Mark m);
    void check(Var v) const;

    int p_ = 0;
    std::vector<Mark> marks_;
};

/// `{0->1, 1-2}` style, directed edges first.
std::ostream& operator<<(std::ostream& os, const Pdag& g);

}  // namespace marvel
