#include "marvel/dag.hpp"

#include <algorithm>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <string>

namespace marvel {

Dag::Dag(int p) : p_(p) {
    if (p < 0) throw std::invalid_argument("Dag: negative vertex count");
    parents_.resize(static_cast<std::size_t>(p));
    children_.resize(static_cast<std::size_t>(p));
}

Dag::Dag(int p, const std::vector<Edge>& edges) : Dag(p) {
    for (const auto& [from, to] : edges) {
        check(from);
        check(to);
        if (from == to)
            throw std::invalid_argument("Dag: self-loop on vertex " + std::to_string(from));
        parents_[static_cast<std::size_t>(to)].insert(from);
        children_[static_cast<std::size_t>(from)].insert(to);
    }
    if (topological_order().size() != static_cast<std::size_t>(p_))
        throw std::invalid_argument("Dag: edge list contains a directed cycle");
}

Var Dag::check(Var v) const {
    if (v < 0 || v >= p_)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " +
                                std::to_string(p_) + ")");
    return v;
}

VarSet Dag::neighbors(Var v) const { return parents(v).united(children(v)); }

bool Dag::has_edge(Var from, Var to) const { return children(from).contains(check(to)); }

std::vector<Edge> Dag::edges() const {
    std::vector<Edge> out;
    for (Var v = 0; v < p_; ++v)
        for (Var c : children_[static_cast<std::size_t>(v)]) out.emplace_back(v, c);
    return out;
}

std::size_t Dag::num_edges() const {
    std::size_t n = 0;
    for (const auto& ps : parents_) n += ps.size();
    return n;
}

int Dag::max_in_degree() const {
    std::size_t m = 0;
    for (const auto& ps : parents_) m = std::max(m, ps.size());
    return static_cast<int>(m);
}

int Dag::max_degree() const {
    std::size_t m = 0;
    for (std::size_t v = 0; v < parents_.size(); ++v)
        m = std::max(m, parents_[v].size() + children_[v].size());
    return static_cast<int>(m);
}

std::vector<Var> Dag::topological_order() const {
    std::vector<std::size_t> indeg(static_cast<std::size_t>(p_));
    std::priority_queue<Var, std::vector<Var>, std::greater<>> ready;
    for (Var v = 0; v < p_; ++v) {
        indeg[static_cast<std::size_t>(v)] = parents_[static_cast<std::size_t>(v)].size();
        if (indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
    }
    std::vector<Var> order;
    order.reserve(static_cast<std::size_t>(p_));
    while (!ready.empty()) {
        Var v = ready.top();
        ready.pop();
        order.push_back(v);
        for (Var c : children_[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(c)] == 0) ready.push(c);
    }
    return order;
}

Dag Dag::without(const VarSet& removed) const {
    std::vector<Edge> kept;
    for (const auto& e : edges())
        if (!removed.contains(e.first) && !removed.contains(e.second)) kept.push_back(e);
    return Dag(p_, kept);
}

std::ostream& operator<<(std::ostream& os, const Dag& g) {
    os << '{';
    const char* sep = "";
    for (const auto& [a, b] : g.edges()) {
        os << sep << a << "->" << b;
        sep = ", ";
    }
    return os << '}';
}

}  // namespace marvel
