#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "marvel/dag.hpp"
#include "marvel/pdag.hpp"
#include "marvel/var_set.hpp"

namespace marvel {

/// Collider a -> c <- b with a, b nonadjacent, stored with a < b.
struct VStructure {
    Var a = 0;
    Var c = 0;
    Var b = 0;

    friend auto operator<=>(const VStructure&, const VStructure&) = default;
};

/// True iff every path between x and y is blocked by `s`.
///
/// Runs a reachability sweep over (vertex, direction) states, linear in the
/// size of the graph. Requires x != y and x, y not in s.
[[nodiscard]] bool d_separated(const Dag& g, Var x, Var y, const VarSet& s);

/// De(x), which includes x itself.
[[nodiscard]] VarSet descendants(const Dag& g, Var x);

/// Ancestors of every vertex in `vs`, including the vertices themselves.
[[nodiscard]] VarSet ancestors(const Dag& g, const VarSet& vs);

/// Graphical removability test.
///
/// For every child z of x:
///   (1) N_x is contained in N_z + {z}
///   (2) Pa_y is contained in Pa_z for every child y of x that is a parent of z.
/// Containment is non-strict.
[[nodiscard]] bool is_removable_graphical(const Dag& g, Var x);

/// Parents, children and co-parents of x.
[[nodiscard]] VarSet markov_boundary_graphical(const Dag& g, Var x);

/// Undirected graph linking every vertex to its Markov boundary.
[[nodiscard]] Pdag moralized_graph(const Dag& g);

[[nodiscard]] Pdag skeleton(const Dag& g);
[[nodiscard]] Pdag skeleton(const Pdag& g);

/// Sorted, canonical (a < b) v-structures.
[[nodiscard]] std::vector<VStructure> v_structures(const Dag& g);
/// v-structures formed by directed edges of a partially directed graph.
[[nodiscard]] std::vector<VStructure> v_structures(const Pdag& g);

/// Skeleton of `g` with only the edges that take part in a v-structure
/// left directed.
[[nodiscard]] Pdag keep_v_structures(const Pdag& g);

struct MeekOutcome {
    Pdag graph;
    /// Undirected edges that two rules wanted to orient in opposite
    /// directions. Such edges are left undirected.
    std::size_t conflicts = 0;
};

/// Applies Meek rules R1-R4 to a fixpoint and reports conflicts instead of
/// throwing. Only undirected edges are ever oriented.
[[nodiscard]] MeekOutcome meek_complete(const Pdag& pd);

/// As meek_complete, but a conflicting input raises ConsistencyError.
[[nodiscard]] Pdag apply_meek_rules(const Pdag& pd);

/// Essential graph via skeleton + v-structures + Meek completion.
[[nodiscard]] Pdag cpdag(const Dag& g);

/// Essential graph by enumerating every topological order of g's skeleton
/// and keeping the orientations that reproduce g's v-structures.
/// Throws CapacityError above kBruteForceMaxVertices.
[[nodiscard]] Pdag cpdag_bruteforce(const Dag& g);

inline constexpr int kBruteForceMaxVertices = 12;

/// Same skeleton and same v-structures.
[[nodiscard]] bool markov_equivalent(const Pdag& a, const Pdag& b);
[[nodiscard]] bool markov_equivalent(const Dag& a, const Dag& b);
[[nodiscard]] bool markov_equivalent(const Dag& a, const Pdag& b);
[[nodiscard]] bool markov_equivalent(const Pdag& a, const Dag& b);

}  // namespace marvel
