#include "marvel/mb.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

#include "marvel/errors.hpp"

namespace marvel {

MbMap::MbMap(int p) {
    if (p < 0) throw std::invalid_argument("MbMap: negative size");
    mb_.resize(static_cast<std::size_t>(p));
}

void MbMap::check(Var x) const {
    if (x < 0 || x >= p())
        throw std::out_of_range("MbMap: variable " + std::to_string(x) + " out of range");
}

void MbMap::link(Var x, Var y) {
    check(x);
    check(y);
    if (x == y) throw std::invalid_argument("MbMap: a variable cannot be in its own boundary");
    if (is_removed(x) || is_removed(y)) throw StateError("MbMap: link to a removed variable");
    mb_[static_cast<std::size_t>(x)].insert(y);
    mb_[static_cast<std::size_t>(y)].insert(x);
}

void MbMap::unlink(Var x, Var y) {
    check(x);
    check(y);
    mb_[static_cast<std::size_t>(x)].erase(y);
    mb_[static_cast<std::size_t>(y)].erase(x);
}

void MbMap::remove(Var x) {
    check(x);
    if (is_removed(x)) throw StateError("MbMap: variable " + std::to_string(x) + " already removed");
    for (Var y : mb_[static_cast<std::size_t>(x)]) mb_[static_cast<std::size_t>(y)].erase(x);
    mb_[static_cast<std::size_t>(x)].clear();
    removed_.insert(x);
}

bool MbMap::consistent() const {
    for (Var x = 0; x < p(); ++x) {
        const VarSet& s = mb_[static_cast<std::size_t>(x)];
        if (s.contains(x)) return false;
        if (is_removed(x) && !s.empty()) return false;
        for (Var y : s) {
            if (y < 0 || y >= p() || is_removed(y)) return false;
            if (!mb_[static_cast<std::size_t>(y)].contains(x)) return false;
        }
    }
    return true;
}

std::ostream& operator<<(std::ostream& os, const MbMap& m) {
    for (Var x : m.remaining()) os << x << ": " << m.mb(x) << '\n';
    return os;
}

MbMap total_conditioning(CiOracle& oracle, const VarSet& variables) {
    const int p = oracle.p();
    MbMap m(p);
    for (Var v = 0; v < p; ++v)
        if (!variables.contains(v)) m.remove(v);
    for (std::size_t i = 0; i < variables.size(); ++i) {
        for (std::size_t j = i + 1; j < variables.size(); ++j) {
            const Var x = variables[i];
            const Var y = variables[j];
            if (!oracle.query(x, y, variables.without({x, y}))) m.link(x, y);
        }
    }
    return m;
}

MbMap total_conditioning(CiOracle& oracle, int p) {
    if (p != oracle.p())
        throw std::invalid_argument("total_conditioning: p does not match the oracle");
    if (p < 2) throw std::invalid_argument("total_conditioning: need p >= 2");
    return total_conditioning(oracle, VarSet::range(p));
}

void update_after_removal(MbMap& m, Var x, const VarSet& neighbors, CiOracle& oracle) {
    if (m.is_removed(x))
        throw StateError("update_after_removal: variable " + std::to_string(x) +
                         " already removed");
    m.remove(x);
    for (std::size_t i = 0; i < neighbors.size(); ++i) {
        for (std::size_t j = i + 1; j < neighbors.size(); ++j) {
            const Var y = neighbors[i];
            const Var z = neighbors[j];
            if (m.is_removed(y) || m.is_removed(z) || !m.mb(y).contains(z)) continue;
            const Var w = m.mb(z).size() < m.mb(y).size() ? z : y;  // y < z
            if (oracle.query(y, z, m.mb(w).without({x, y, z}))) m.unlink(y, z);
        }
    }
}

}  // namespace marvel
