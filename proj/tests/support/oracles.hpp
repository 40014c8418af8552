#pragma once

// Slow reference implementations. They share no code with the library
// beyond the Dag/Pdag containers so that agreement means something.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "marvel/dag.hpp"
#include "marvel/pdag.hpp"
#include "marvel/synth.hpp"

namespace marvel::testing {

/// Descendants by plain DFS over children, x included.
inline std::vector<bool> dfs_descendants(const Dag& g, Var x) {
    std::vector<bool> seen(static_cast<std::size_t>(g.p()), false);
    std::vector<Var> stack{x};
    seen[static_cast<std::size_t>(x)] = true;
    while (!stack.empty()) {
        const Var v = stack.back();
        stack.pop_back();
        for (Var c : g.children(v))
            if (!seen[static_cast<std::size_t>(c)]) {
                seen[static_cast<std::size_t>(c)] = true;
                stack.push_back(c);
            }
    }
    return seen;
}

/// d-separation by enumerating every simple path between x and y in the
/// skeleton and applying the blocking rule vertex by vertex.
inline bool dsep_by_paths(const Dag& g, Var x, Var y, const VarSet& s) {
    const auto p = static_cast<std::size_t>(g.p());
    std::vector<std::vector<bool>> desc(p);
    for (Var v = 0; v < g.p(); ++v) desc[static_cast<std::size_t>(v)] = dfs_descendants(g, v);
    auto activates = [&](Var collider) {
        for (Var z : s)
            if (desc[static_cast<std::size_t>(collider)][static_cast<std::size_t>(z)]) return true;
        return false;
    };
    std::vector<Var> path{x};
    std::vector<bool> on_path(p, false);
    on_path[static_cast<std::size_t>(x)] = true;

    auto path_open = [&]() {
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            const Var prev = path[i - 1];
            const Var mid = path[i];
            const Var next = path[i + 1];
            const bool collider = g.has_edge(prev, mid) && g.has_edge(next, mid);
            if (collider ? !activates(mid) : s.contains(mid)) return false;
        }
        return true;
    };
    std::function<bool(Var)> open_path_from = [&](Var v) {
        if (v == y) return path_open();
        for (Var w : g.neighbors(v)) {
            if (on_path[static_cast<std::size_t>(w)]) continue;
            on_path[static_cast<std::size_t>(w)] = true;
            path.push_back(w);
            const bool found = open_path_from(w);
            path.pop_back();
            on_path[static_cast<std::size_t>(w)] = false;
            if (found) return true;
        }
        return false;
    };
    return !open_path_from(x);
}

/// Visits every subset of `items` (any order).
template <class F>
void all_subsets(const std::vector<Var>& items, F&& f) {
    const std::uint32_t n = static_cast<std::uint32_t>(items.size());
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<Var> sub;
        for (std::uint32_t i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(items[i]);
        f(VarSet(sub));
    }
}

/// Removability straight from its definition: deleting x leaves every
/// d-separation statement among the other vertices unchanged.
inline bool removable_by_definition(const Dag& g, Var x) {
    const Dag reduced = g.without(VarSet{x});
    for (Var a = 0; a < g.p(); ++a) {
        if (a == x) continue;
        for (Var b = a + 1; b < g.p(); ++b) {
            if (b == x) continue;
            std::vector<Var> rest;
            for (Var v = 0; v < g.p(); ++v)
                if (v != x && v != a && v != b) rest.push_back(v);
            bool same = true;
            all_subsets(rest, [&](const VarSet& s) {
                if (same && dsep_by_paths(g, a, b, s) != dsep_by_paths(reduced, a, b, s))
                    same = false;
            });
            if (!same) return false;
        }
    }
    return true;
}

/// Markov boundary read off the definition: parents, children and the other
/// parents of each child.
inline VarSet mb_by_definition(const Dag& g, Var x) {
    std::vector<Var> out;
    for (Var v = 0; v < g.p(); ++v) {
        if (v == x) continue;
        bool in = g.has_edge(v, x) || g.has_edge(x, v);
        for (Var c = 0; c < g.p() && !in; ++c)
            in = g.has_edge(x, c) && g.has_edge(v, c);
        if (in) out.push_back(v);
    }
    return VarSet(out);
}

/// Canonical (a, c, b) triples, a < b, by scanning all triples.
inline std::vector<std::array<Var, 3>> colliders_by_scan(const Dag& g) {
    std::vector<std::array<Var, 3>> out;
    for (Var c = 0; c < g.p(); ++c)
        for (Var a = 0; a < g.p(); ++a)
            for (Var b = a + 1; b < g.p(); ++b)
                if (a != c && b != c && g.has_edge(a, c) && g.has_edge(b, c) && !g.adjacent(a, b))
                    out.push_back({a, c, b});
    std::sort(out.begin(), out.end());
    return out;
}

/// Essential graph by listing every vertex permutation, orienting the
/// skeleton along it and keeping those orientations that reproduce g's
/// colliders. Factorial: only for tiny graphs.
inline Pdag cpdag_by_permutations(const Dag& g) {
    const int p = g.p();
    if (p > 8) throw std::invalid_argument("cpdag_by_permutations: p too large");
    const auto target = colliders_by_scan(g);
    std::vector<Edge> skel;
    for (const auto& [a, b] : g.edges()) skel.emplace_back(std::min(a, b), std::max(a, b));
    std::vector<int> seen_forward(skel.size(), 0);
    std::vector<int> seen_backward(skel.size(), 0);
    std::vector<Var> perm(static_cast<std::size_t>(p));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> rank(static_cast<std::size_t>(p));
    do {
        for (int i = 0; i < p; ++i) rank[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
        std::vector<Edge> oriented;
        for (const auto& [a, b] : skel)
            oriented.push_back(rank[static_cast<std::size_t>(a)] < rank[static_cast<std::size_t>(b)]
                                   ? Edge{a, b}
                                   : Edge{b, a});
        const Dag member(p, oriented);
        if (colliders_by_scan(member) != target) continue;
        for (std::size_t i = 0; i < skel.size(); ++i) {
            if (member.has_edge(skel[i].first, skel[i].second))
                seen_forward[i] = 1;
            else
                seen_backward[i] = 1;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    Pdag out(p);
    for (std::size_t i = 0; i < skel.size(); ++i) {
        const auto [a, b] = skel[i];
        if (seen_forward[i] && seen_backward[i])
            out.set_undirected(a, b);
        else if (seen_forward[i])
            out.orient(a, b);
        else
            out.orient(b, a);
    }
    return out;
}

/// Random DAG with p drawn from [p_lo, p_hi] and m uniform on [0, C(p, 2)].
inline Dag random_dag(std::mt19937_64& rng, int p_lo, int p_hi) {
    std::uniform_int_distribution<int> pick_p(p_lo, p_hi);
    const int p = pick_p(rng);
    const std::uint64_t pairs = static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(p - 1) / 2;
    std::uniform_int_distribution<std::uint64_t> pick_m(0, pairs);
    const std::uint64_t m = pick_m(rng);
    return erdos_renyi_dag(p, m, RngSeed{rng()});
}

}  // namespace marvel::testing
