#include "marvel/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

#include "marvel/errors.hpp"

namespace marvel {

namespace {

void check_vertex(const Dag& g, Var v) {
    if (v < 0 || v >= g.p())
        throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " +
                                std::to_string(g.p()) + ")");
}

}  // namespace

bool d_separated(const Dag& g, Var x, Var y, const VarSet& s) {
    check_vertex(g, x);
    check_vertex(g, y);
    for (Var v : s) check_vertex(g, v);
    if (x == y) throw std::invalid_argument("d_separated: x and y must differ");
    if (s.contains(x) || s.contains(y))
        throw std::invalid_argument("d_separated: conditioning set contains an endpoint");

    const auto n = static_cast<std::size_t>(g.p());
    std::vector<bool> in_s(n, false);
    for (Var v : s) in_s[static_cast<std::size_t>(v)] = true;
    std::vector<bool> anc_s(n, false);
    for (Var v : ancestors(g, s)) anc_s[static_cast<std::size_t>(v)] = true;

    // Direction: 0 = arrived from a child (moving up), 1 = arrived from a parent.
    std::vector<bool> seen(2 * n, false);
    std::deque<std::pair<Var, int>> frontier{{x, 0}};
    while (!frontier.empty()) {
        auto [v, dir] = frontier.front();
        frontier.pop_front();
        const auto key = 2 * static_cast<std::size_t>(v) + static_cast<std::size_t>(dir);
        if (seen[key]) continue;
        seen[key] = true;
        const bool observed = in_s[static_cast<std::size_t>(v)];
        if (v == y && !observed) return false;
        if (dir == 0) {
            if (observed) continue;
            for (Var pa : g.parents(v)) frontier.emplace_back(pa, 0);
            for (Var ch : g.children(v)) frontier.emplace_back(ch, 1);
        } else {
            if (!observed)
                for (Var ch : g.children(v)) frontier.emplace_back(ch, 1);
            if (anc_s[static_cast<std::size_t>(v)])
                for (Var pa : g.parents(v)) frontier.emplace_back(pa, 0);
        }
    }
    return true;
}

VarSet descendants(const Dag& g, Var x) {
    check_vertex(g, x);
    std::vector<bool> seen(static_cast<std::size_t>(g.p()), false);
    std::vector<Var> stack{x};
    std::vector<Var> out;
    seen[static_cast<std::size_t>(x)] = true;
    while (!stack.empty()) {
        Var v = stack.back();
        stack.pop_back();
        out.push_back(v);
        for (Var c : g.children(v))
            if (!seen[static_cast<std::size_t>(c)]) {
                seen[static_cast<std::size_t>(c)] = true;
                stack.push_back(c);
            }
    }
    return VarSet(std::move(out));
}

VarSet ancestors(const Dag& g, const VarSet& vs) {
    std::vector<bool> seen(static_cast<std::size_t>(g.p()), false);
    std::vector<Var> stack;
    for (Var v : vs) {
        check_vertex(g, v);
        seen[static_cast<std::size_t>(v)] = true;
        stack.push_back(v);
    }
    std::vector<Var> out;
    while (!stack.empty()) {
        Var v = stack.back();
        stack.pop_back();
        out.push_back(v);
        for (Var pa : g.parents(v))
            if (!seen[static_cast<std::size_t>(pa)]) {
                seen[static_cast<std::size_t>(pa)] = true;
                stack.push_back(pa);
            }
    }
    return VarSet(std::move(out));
}

bool is_removable_graphical(const Dag& g, Var x) {
    const VarSet nx = g.neighbors(x);
    for (Var z : g.children(x)) {
        if (!nx.is_subset_of(g.neighbors(z).with(z))) return false;
        const VarSet& pa_z = g.parents(z);
        for (Var y : g.children(x).intersected(pa_z))
            if (!g.parents(y).is_subset_of(pa_z)) return false;
    }
    return true;
}

VarSet markov_boundary_graphical(const Dag& g, Var x) {
    VarSet mb = g.neighbors(x);
    for (Var c : g.children(x)) mb = mb.united(g.parents(c));
    mb.erase(x);
    return mb;
}

Pdag moralized_graph(const Dag& g) {
    Pdag out(g.p());
    for (Var v = 0; v < g.p(); ++v)
        for (Var u : markov_boundary_graphical(g, v)) out.add_undirected(v, u);
    return out;
}

Pdag skeleton(const Dag& g) {
    Pdag out(g.p());
    for (const auto& [a, b] : g.edges()) out.add_undirected(a, b);
    return out;
}

Pdag skeleton(const Pdag& g) {
    Pdag out(g.p());
    for (Var a = 0; a < g.p(); ++a)
        for (Var b = a + 1; b < g.p(); ++b)
            if (g.adjacent(a, b)) out.add_undirected(a, b);
    return out;
}

std::vector<VStructure> v_structures(const Dag& g) {
    std::vector<VStructure> out;
    for (Var c = 0; c < g.p(); ++c) {
        const VarSet& pa = g.parents(c);
        for (std::size_t i = 0; i < pa.size(); ++i)
            for (std::size_t j = i + 1; j < pa.size(); ++j)
                if (!g.adjacent(pa[i], pa[j])) out.push_back({pa[i], c, pa[j]});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VStructure> v_structures(const Pdag& g) {
    std::vector<VStructure> out;
    for (Var c = 0; c < g.p(); ++c) {
        const VarSet pa = g.parents(c);
        for (std::size_t i = 0; i < pa.size(); ++i)
            for (std::size_t j = i + 1; j < pa.size(); ++j)
                if (!g.adjacent(pa[i], pa[j])) out.push_back({pa[i], c, pa[j]});
    }
    std::sort(out.begin(), out.end());
    return out;
}

Pdag keep_v_structures(const Pdag& g) {
    Pdag out = skeleton(g);
    for (const auto& vs : v_structures(g)) {
        out.orient(vs.a, vs.c);
        out.orient(vs.b, vs.c);
    }
    return out;
}

namespace {

// Would some Meek rule orient the undirected edge a-b as a->b?
bool meek_forces(const Pdag& g, Var a, Var b) {
    const int p = g.p();
    // R1: c->a, c and b nonadjacent.
    for (Var c = 0; c < p; ++c)
        if (c != b && g.is_directed(c, a) && !g.adjacent(c, b)) return true;
    // R2: a->c->b.
    for (Var c = 0; c < p; ++c)
        if (g.is_directed(a, c) && g.is_directed(c, b)) return true;
    // R3: a-c, a-d, c->b, d->b, c and d nonadjacent.
    const VarSet und = g.undirected_neighbors(a);
    for (std::size_t i = 0; i < und.size(); ++i) {
        const Var c = und[i];
        if (c == b || !g.is_directed(c, b)) continue;
        for (std::size_t j = i + 1; j < und.size(); ++j) {
            const Var d = und[j];
            if (d != b && g.is_directed(d, b) && !g.adjacent(c, d)) return true;
        }
    }
    // R4: a-d, d->c, c->b, a adjacent to c, b and d nonadjacent.
    for (Var d : und) {
        if (d == b || g.adjacent(b, d)) continue;
        for (Var c = 0; c < p; ++c)
            if (c != a && g.is_directed(d, c) && g.is_directed(c, b) && g.adjacent(a, c))
                return true;
    }
    return false;
}

}  // namespace

MeekOutcome meek_complete(const Pdag& pd) {
    MeekOutcome out{pd, 0};
    Pdag& g = out.graph;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [a, b] : g.undirected_edges()) {
            if (!g.is_undirected(a, b)) continue;
            const bool ab = meek_forces(g, a, b);
            const bool ba = meek_forces(g, b, a);
            if (ab && ba) continue;
            if (ab) {
                g.orient(a, b);
                changed = true;
            } else if (ba) {
                g.orient(b, a);
                changed = true;
            }
        }
    }
    for (const auto& [a, b] : g.undirected_edges())
        if (meek_forces(g, a, b) && meek_forces(g, b, a)) ++out.conflicts;
    return out;
}

Pdag apply_meek_rules(const Pdag& pd) {
    MeekOutcome out = meek_complete(pd);
    if (out.conflicts > 0)
        throw ConsistencyError("Meek rules force " + std::to_string(out.conflicts) +
                               " edge(s) in both directions");
    return std::move(out.graph);
}

Pdag cpdag(const Dag& g) { return apply_meek_rules(keep_v_structures(Pdag::from_dag(g))); }

// Every member of the equivalence class is the skeleton oriented along some
// vertex order. Placing vertex v after a set S of already placed vertices
// makes v's parents exactly its placed neighbours, so whether the placement
// reproduces g's v-structures at v depends only on S. That allows the full
// set of class members to be enumerated through the lattice of placed sets:
// an edge u-v can point u->v in some member iff some placed set reachable
// from the empty set and able to complete to the full set contains u but
// not v.
Pdag cpdag_bruteforce(const Dag& g) {
    const int p = g.p();
    if (p > kBruteForceMaxVertices)
        throw CapacityError("cpdag_bruteforce: p = " + std::to_string(p) + " exceeds " +
                            std::to_string(kBruteForceMaxVertices));
    const std::uint32_t full = (p == 0) ? 0U : ((1U << p) - 1U);
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(p), 0);
    for (const auto& [a, b] : g.edges()) {
        adj[static_cast<std::size_t>(a)] |= 1U << b;
        adj[static_cast<std::size_t>(b)] |= 1U << a;
    }
    std::set<std::pair<Var, Var>> vset;  // (c, a) and (c, b) for each a->c<-b
    std::vector<std::uint32_t> collider_parents(static_cast<std::size_t>(p), 0);
    for (const auto& vs : v_structures(g)) {
        vset.insert({vs.c, vs.a * p + vs.b});
        collider_parents[static_cast<std::size_t>(vs.c)] |= (1U << vs.a) | (1U << vs.b);
    }

    auto placeable = [&](std::uint32_t placed, Var v) {
        const std::uint32_t need = collider_parents[static_cast<std::size_t>(v)];
        if ((placed & need) != need) return false;
        const std::uint32_t pa = placed & adj[static_cast<std::size_t>(v)];
        for (Var a = 0; a < p; ++a) {
            if (!(pa & (1U << a))) continue;
            for (Var b = a + 1; b < p; ++b) {
                if (!(pa & (1U << b)) || (adj[static_cast<std::size_t>(a)] & (1U << b))) continue;
                if (!vset.contains({v, a * p + b})) return false;
            }
        }
        return true;
    };

    const std::size_t states = std::size_t{1} << p;
    std::vector<bool> forward(states, false), backward(states, false);
    forward[0] = true;
    for (std::uint32_t s = 0; s <= full; ++s) {
        if (!forward[s]) continue;
        for (Var v = 0; v < p; ++v)
            if (!(s & (1U << v)) && placeable(s, v)) forward[s | (1U << v)] = true;
        if (s == full) break;
    }
    backward[full] = true;
    for (std::uint32_t s = full + 1; s-- > 0;) {
        if (s != full) {
            for (Var v = 0; v < p; ++v)
                if (!(s & (1U << v)) && backward[s | (1U << v)] && placeable(s, v)) {
                    backward[s] = true;
                    break;
                }
        }
    }
    if (!backward[0]) throw std::logic_error("cpdag_bruteforce: no member reproduces g");

    // can[u][v]: some member orients u->v.
    std::vector<std::uint32_t> can(static_cast<std::size_t>(p), 0);
    for (std::uint32_t s = 0; s <= full; ++s) {
        if (!forward[s] || !backward[s]) {
            if (s == full) break;
            continue;
        }
        for (Var u = 0; u < p; ++u) {
            if (!(s & (1U << u))) continue;
            can[static_cast<std::size_t>(u)] |= adj[static_cast<std::size_t>(u)] & ~s;
        }
        if (s == full) break;
    }

    Pdag out(p);
    for (const auto& [a, b] : g.edges()) {
        const bool ab = can[static_cast<std::size_t>(a)] & (1U << b);
        const bool ba = can[static_cast<std::size_t>(b)] & (1U << a);
        if (ab && ba)
            out.set_undirected(a, b);
        else if (ab)
            out.orient(a, b);
        else
            out.orient(b, a);
    }
    return out;
}

bool markov_equivalent(const Pdag& a, const Pdag& b) {
    if (a.p() != b.p()) return false;
    return skeleton(a) == skeleton(b) && v_structures(a) == v_structures(b);
}

bool markov_equivalent(const Dag& a, const Dag& b) {
    return markov_equivalent(Pdag::from_dag(a), Pdag::from_dag(b));
}

bool markov_equivalent(const Dag& a, const Pdag& b) {
    return markov_equivalent(Pdag::from_dag(a), b);
}

bool markov_equivalent(const Pdag& a, const Dag& b) {
    return markov_equivalent(a, Pdag::from_dag(b));
}

}  // namespace marvel
