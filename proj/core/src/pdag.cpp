#include "marvel/pdag.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace marvel {

Pdag::Pdag(int p) : p_(p) {
    if (p < 0) throw std::invalid_argument("Pdag: negative vertex count");
    marks_.assign(static_cast<std::size_t>(p) * static_cast<std::size_t>(p), Mark::None);
}

Pdag Pdag::from_dag(const Dag& g) {
    Pdag pd(g.p());
    for (const auto& [a, b] : g.edges()) pd.orient(a, b);
    return pd;
}

void Pdag::check(Var v) const {
    if (v < 0 || v >= p_)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " +
                                std::to_string(p_) + ")");
}

Pdag::Mark Pdag::mark(Var a, Var b) const {
    check(a);
    check(b);
    return marks_[static_cast<std::size_t>(a) * static_cast<std::size_t>(p_) +
                  static_cast<std::size_t>(b)];
}

void Pdag::set(Var a, Var b, Mark m) {
    check(a);
    check(b);
    if (a == b) throw std::invalid_argument("Pdag: self-loop on vertex " + std::to_string(a));
    Mark mirror = m;
    if (m == Mark::Out) mirror = Mark::In;
    if (m == Mark::In) mirror = Mark::Out;
    const auto n = static_cast<std::size_t>(p_);
    marks_[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] = m;
    marks_[static_cast<std::size_t>(b) * n + static_cast<std::size_t>(a)] = mirror;
}

bool Pdag::add_undirected(Var a, Var b) {
    if (adjacent(a, b)) return false;
    set(a, b, Mark::Undirected);
    return true;
}

void Pdag::orient(Var from, Var to) { set(from, to, Mark::Out); }

void Pdag::set_undirected(Var a, Var b) { set(a, b, Mark::Undirected); }

void Pdag::remove_edge(Var a, Var b) { set(a, b, Mark::None); }

std::vector<Edge> Pdag::directed_edges() const {
    std::vector<Edge> out;
    for (Var a = 0; a < p_; ++a)
        for (Var b = 0; b < p_; ++b)
            if (mark(a, b) == Mark::Out) out.emplace_back(a, b);
    return out;
}

std::vector<Edge> Pdag::undirected_edges() const {
    std::vector<Edge> out;
    for (Var a = 0; a < p_; ++a)
        for (Var b = a + 1; b < p_; ++b)
            if (mark(a, b) == Mark::Undirected) out.emplace_back(a, b);
    return out;
}

std::size_t Pdag::num_adjacencies() const {
    std::size_t n = 0;
    for (Var a = 0; a < p_; ++a)
        for (Var b = a + 1; b < p_; ++b)
            if (adjacent(a, b)) ++n;
    return n;
}

VarSet Pdag::adjacents(Var v) const {
    std::vector<Var> out;
    for (Var u = 0; u < p_; ++u)
        if (mark(v, u) != Mark::None) out.push_back(u);
    return VarSet::from_sorted(std::move(out));
}

VarSet Pdag::parents(Var v) const {
    std::vector<Var> out;
    for (Var u = 0; u < p_; ++u)
        if (mark(u, v) == Mark::Out) out.push_back(u);
    return VarSet::from_sorted(std::move(out));
}

VarSet Pdag::children(Var v) const {
    std::vector<Var> out;
    for (Var u = 0; u < p_; ++u)
        if (mark(v, u) == Mark::Out) out.push_back(u);
    return VarSet::from_sorted(std::move(out));
}

VarSet Pdag::undirected_neighbors(Var v) const {
    std::vector<Var> out;
    for (Var u = 0; u < p_; ++u)
        if (mark(v, u) == Mark::Undirected) out.push_back(u);
    return VarSet::from_sorted(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Pdag& g) {
    os << '{';
    const char* sep = "";
    for (const auto& [a, b] : g.directed_edges()) {
        os << sep << a << "->" << b;
        sep = ", ";
    }
    for (const auto& [a, b] : g.undirected_edges()) {
        os << sep << a << '-' << b;
        sep = ", ";
    }
    return os << '}';
}

}  // namespace marvel
