#include "marvel/learner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "marvel/errors.hpp"
#include "marvel/graph.hpp"

namespace marvel {

MarvelCaches::MarvelCaches(int p, bool enabled)
    : neighbor_info(static_cast<std::size_t>(p)),
      vpa(static_cast<std::size_t>(p)),
      enabled_(enabled),
      cond1_holds_(static_cast<std::size_t>(p), 0) {}

void MarvelCaches::prune(Var x) {
    neighbor_info.at(static_cast<std::size_t>(x)).reset();
    vpa.at(static_cast<std::size_t>(x)).reset();
    for (auto& entry : vpa) {
        if (!entry) continue;
        std::erase_if(*entry, [x](const ParentVStructure& v) {
            return v.parent == x || v.child == x || v.coparent == x;
        });
    }
    std::erase_if(cond1_nosep, [x](const auto& k) {
        const auto& [a, b, c] = k;
        return a == x || b == x || c == x;
    });
    std::erase_if(cond2_nosep, [x](const auto& k) {
        const auto& [a, b, c, d] = k;
        return a == x || b == x || c == x || d == x;
    });
    cond1_holds_.at(static_cast<std::size_t>(x)) = 0;
}

bool MarvelCaches::condition1_holds(Var x) const {
    return cond1_holds_.at(static_cast<std::size_t>(x)) != 0;
}

void MarvelCaches::set_condition1(Var x, bool holds) {
    cond1_holds_.at(static_cast<std::size_t>(x)) = holds ? 1 : 0;
}

MemoizedOracle::MemoizedOracle(CiOracle& inner, bool memoize) : inner_(inner), memoize_(memoize) {}

bool MemoizedOracle::independent(Var x, Var y, const VarSet& s) {
    if (!memoize_) {
        forwarded_.record(s.size());
        return inner_.query(x, y, s);
    }
    auto key = std::make_tuple(std::min(x, y), std::max(x, y), s);
    if (auto it = answers_.find(key); it != answers_.end()) return it->second;
    forwarded_.record(s.size());
    const bool answer = inner_.query(x, y, s);
    answers_.emplace(std::move(key), answer);
    return answer;
}

NeighborInfo find_neighbors(Var x, const VarSet& mb_x, CiOracle& oracle, MarvelCaches& caches) {
    auto& slot = caches.neighbor_info.at(static_cast<std::size_t>(x));
    if (caches.enabled() && slot && mb_x.is_subset_of(slot->neighbors.united(slot->coparents))) {
        NeighborInfo info;
        info.neighbors = slot->neighbors.intersected(mb_x);
        info.coparents = slot->coparents.intersected(mb_x);
        for (Var t : info.coparents) info.sepsets[t] = slot->sepsets.at(t).intersected(mb_x);
        return info;
    }

    NeighborInfo info;
    for (Var y : mb_x) {
        VarSet sep;
        const bool separated = for_each_subset(
            mb_x.without(y),
            [&](const VarSet& s) {
                if (!oracle.query(x, y, s)) return false;
                sep = s;
                return true;
            },
            /*proper=*/true);
        if (separated) {
            info.coparents.insert(y);
            info.sepsets.emplace(y, std::move(sep));
        } else {
            info.neighbors.insert(y);
        }
    }
    if (caches.enabled()) slot = info;
    return info;
}

VStructSet find_vpa(Var x, const NeighborInfo& info, const VarSet& mb_x, CiOracle& oracle,
                    MarvelCaches& caches) {
    auto& slot = caches.vpa.at(static_cast<std::size_t>(x));
    if (caches.enabled() && slot) {
        VStructSet kept;
        for (const auto& v : *slot)
            if (info.neighbors.contains(v.child) && info.coparents.contains(v.coparent))
                kept.push_back(v);
        return kept;
    }

    VStructSet out;
    const VarSet base = mb_x.with(x);
    for (Var t : info.coparents) {
        const VarSet& sep = info.sepsets.at(t);
        for (Var y : info.neighbors) {
            if (sep.contains(y)) continue;
            const bool separable = for_each_subset(
                base.without({y, t}), [&](const VarSet& s) { return oracle.query(y, t, s); });
            if (!separable) out.push_back({x, y, t});
        }
    }
    std::sort(out.begin(), out.end());
    if (caches.enabled()) slot = out;
    return out;
}

bool check_condition1(Var x, const NeighborInfo& info, const VarSet& mb_x, CiOracle& oracle,
                      MarvelCaches& caches) {
    const VarSet& n = info.neighbors;
    for (std::size_t i = 0; i < n.size(); ++i) {
        for (std::size_t j = i + 1; j < n.size(); ++j) {
            const Var z = n[i];
            const Var w = n[j];
            const auto key = std::make_tuple(x, z, w);
            if (caches.enabled() && caches.cond1_nosep.contains(key)) continue;
            const bool separable = for_each_subset(mb_x.without({z, w}), [&](const VarSet& s) {
                return oracle.query(z, w, s.with(x));
            });
            if (separable) {
                caches.set_condition1(x, false);
                return false;
            }
            if (caches.enabled()) caches.cond1_nosep.insert(key);
        }
    }
    caches.set_condition1(x, true);
    return true;
}

bool check_condition2(Var x, const NeighborInfo& info, const VStructSet& vpa, const VarSet& mb_x,
                      CiOracle& oracle, MarvelCaches& caches) {
    if (!caches.condition1_holds(x))
        throw StateError("check_condition2: Condition 1 has not been established for variable " +
                         std::to_string(x));
    for (const auto& v : vpa) {
        const Var y = v.child;
        const Var t = v.coparent;
        for (Var z : info.neighbors) {
            if (z == y) continue;
            const auto key = std::make_tuple(x, y, z, t);
            if (caches.enabled() && caches.cond2_nosep.contains(key)) continue;
            const VarSet given = VarSet{x, y};
            const bool separable = for_each_subset(mb_x.without({z, y, t}), [&](const VarSet& s) {
                return oracle.query(z, t, s.united(given));
            });
            if (separable) return false;
            if (caches.enabled()) caches.cond2_nosep.insert(key);
        }
    }
    return true;
}

RemovabilityVerdict is_removable_ci(Var x, const VarSet& mb_x, CiOracle& oracle,
                                    MarvelCaches& caches) {
    RemovabilityVerdict verdict;
    verdict.info = find_neighbors(x, mb_x, oracle, caches);
    verdict.condition1 = check_condition1(x, verdict.info, mb_x, oracle, caches);
    if (!verdict.condition1) return verdict;
    verdict.vpa = find_vpa(x, verdict.info, mb_x, oracle, caches);
    verdict.removable = check_condition2(x, verdict.info, verdict.vpa, mb_x, oracle, caches);
    return verdict;
}

namespace {

void orient_into(Pdag& g, Var x) {
    for (Var u : g.undirected_neighbors(x)) g.orient(u, x);
}

VStructure canonical(Var a, Var c, Var b) { return a < b ? VStructure{a, c, b} : VStructure{b, c, a}; }

// Skeleton of g plus the witnessed colliders whose endpoints stayed
// nonadjacent. Arrows from different eliminations can line up into a collider
// that no single step observed, so colliders are not read back off g. An edge
// claimed in both directions is left undirected.
Pdag witnessed_v_structures(const Pdag& g, const std::set<VStructure>& witnessed, std::size_t& clashes) {
    Pdag out = skeleton(g);
    std::set<Edge> arrows;
    for (const auto& v : witnessed) {
        if (g.adjacent(v.a, v.b) || !g.adjacent(v.a, v.c) || !g.adjacent(v.b, v.c)) continue;
        arrows.insert({v.a, v.c});
        arrows.insert({v.b, v.c});
    }
    for (const auto& [from, to] : arrows) {
        if (arrows.contains({to, from})) {
            if (from < to) ++clashes;
            continue;
        }
        out.orient(from, to);
    }
    return out;
}

}  // namespace

LearnResult marvel_learn(CiOracle& oracle, const MbMap& mb0, const LearnOptions& opts) {
    const int p = mb0.p();
    if (p != oracle.p()) throw std::invalid_argument("marvel_learn: oracle and Mb sizes differ");
    if (!mb0.removed().empty())
        throw std::invalid_argument("marvel_learn: initial Markov boundaries must cover all variables");
    if (!mb0.consistent())
        throw std::invalid_argument("marvel_learn: initial Markov boundaries are not symmetric");

    MemoizedOracle tests(oracle, opts.use_caches);
    MarvelCaches caches(p, opts.use_caches);
    MbMap mb = mb0;
    Pdag g(p);
    LearnResult result;
    VarSet remaining = VarSet::range(p);
    std::set<VStructure> witnessed;

    auto eliminate = [&](Var x, const NeighborInfo& info) {
        orient_into(g, x);
        for (std::size_t i = 0; i < info.neighbors.size(); ++i)
            for (std::size_t j = i + 1; j < info.neighbors.size(); ++j) {
                const Var u = info.neighbors[i], w = info.neighbors[j];
                if (g.is_directed(u, x) && g.is_directed(w, x)) witnessed.insert(canonical(u, x, w));
            }
        update_after_removal(mb, x, info.neighbors, tests);
        caches.prune(x);
        remaining.erase(x);
        result.elimination_order.push_back(x);
    };

    for (int iteration = 0; !remaining.empty(); ++iteration) {
        std::vector<Var> order(remaining.begin(), remaining.end());
        std::stable_sort(order.begin(), order.end(),
                         [&](Var a, Var b) { return mb.mb(a).size() < mb.mb(b).size(); });

        bool removed = false;
        for (Var x : order) {
            const VarSet& mb_x = mb.mb(x);
            const NeighborInfo info = find_neighbors(x, mb_x, tests, caches);
            for (Var y : info.neighbors) g.add_undirected(x, y);

            ScanRecord scan{iteration, x, mb_x.size(), false, false};
            scan.condition1 = check_condition1(x, info, mb_x, tests, caches);
            if (scan.condition1) {
                const VStructSet vpa = find_vpa(x, info, mb_x, tests, caches);
                for (const auto& v : vpa) {
                    g.orient(v.parent, v.child);
                    g.orient(v.coparent, v.child);
                    witnessed.insert(canonical(v.parent, v.child, v.coparent));
                }
                scan.removable = check_condition2(x, info, vpa, mb_x, tests, caches);
            }
            result.scans.push_back(scan);
            if (scan.removable) {
                eliminate(x, info);
                removed = true;
                break;
            }
        }

        if (!removed) {
            const Var x = order.front();
            const NeighborInfo info = find_neighbors(x, mb.mb(x), tests, caches);
            result.warnings.push_back("iteration " + std::to_string(iteration) +
                                      ": no removable variable found; removed variable " +
                                      std::to_string(x) + " with the smallest Markov boundary");
            eliminate(x, info);
        }
    }

    std::size_t clashes = 0;
    MeekOutcome completed = meek_complete(witnessed_v_structures(g, witnessed, clashes));
    if (clashes > 0)
        result.warnings.push_back(std::to_string(clashes) + " edge(s) claimed by opposing v-structures left undirected");
    if (completed.conflicts > 0)
        result.warnings.push_back("Meek completion left " + std::to_string(completed.conflicts) +
                                  " conflicting edge(s) undirected");
    result.essential = std::move(completed.graph);
    result.tests = tests.forwarded();
    return result;
}

std::uint64_t ci_budget_bound(std::uint64_t p, std::uint64_t delta_in) {
    // Scaled by 200 so that 0.45 and p / 2 stay integral.
    const std::uint64_t d = delta_in;
    const std::uint64_t updates = p * (d * (d == 0 ? 0 : d - 1) / 2) * 200;
    const std::uint64_t removability = p * d * (100 + 45 * d) * (std::uint64_t{1} << d);
    const std::uint64_t scaled = updates + removability;
    return (scaled + 199) / 200;
}

}  // namespace marvel
