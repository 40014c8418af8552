#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "marvel/ci.hpp"
#include "marvel/mb.hpp"
#include "marvel/pdag.hpp"
#include "marvel/var_set.hpp"

namespace marvel {

/// Neighbours N_x and co-parents of x, with the separating set found for
/// each co-parent.
struct NeighborInfo {
    VarSet neighbors;
    VarSet coparents;
    std::map<Var, VarSet> sepsets;

    friend bool operator==(const NeighborInfo&, const NeighborInfo&) = default;
};

/// parent -> child <- coparent, seen from `parent`.
struct ParentVStructure {
    Var parent = 0;
    Var child = 0;
    Var coparent = 0;

    friend auto operator<=>(const ParentVStructure&, const ParentVStructure&) = default;
};

/// v-structures in which a given variable is a parent, sorted.
using VStructSet = std::vector<ParentVStructure>;

/// State reused across iterations so that no CI test is performed twice.
///
/// Entries are pruned only when one of their variables is removed. With
/// `enabled` false every lookup misses and nothing is stored, which gives a
/// reference run for checking that the caches change nothing but the count.
class MarvelCaches {
public:
    explicit MarvelCaches(int p, bool enabled = true);

    [[nodiscard]] bool enabled() const { return enabled_; }

    /// Drops every entry that mentions x.
    void prune(Var x);

    std::vector<std::optional<NeighborInfo>> neighbor_info;
    std::vector<std::optional<VStructSet>> vpa;
    /// (x, z, w), z < w: no S + {x} with S inside Mb(x) separates z and w.
    std::set<std::tuple<Var, Var, Var>> cond1_nosep;
    /// (x, y, z, t): no S + {x, y} with S inside Mb(x) separates z and t.
    std::set<std::tuple<Var, Var, Var, Var>> cond2_nosep;

    /// Set by check_condition1 when it holds for x, cleared when it fails.
    [[nodiscard]] bool condition1_holds(Var x) const;
    void set_condition1(Var x, bool holds);

private:
    bool enabled_;
    std::vector<char> cond1_holds_;
};

/// Forwards queries to another oracle. With memoization on, a query whose
/// (pair, conditioning set) was already answered is replayed instead of
/// forwarded. forwarded() counts the tests the wrapped oracle performed on
/// this wrapper's behalf.
class MemoizedOracle final : public CiOracle {
public:
    MemoizedOracle(CiOracle& inner, bool memoize);

    [[nodiscard]] int p() const override { return inner_.p(); }
    [[nodiscard]] const CiStats& forwarded() const { return forwarded_; }

protected:
    bool independent(Var x, Var y, const VarSet& s) override;

private:
    CiOracle& inner_;
    bool memoize_;
    CiStats forwarded_;
    std::map<std::tuple<Var, Var, VarSet>, bool> answers_;
};

/// Splits Mb(x) into neighbours and co-parents.
///
/// y is a co-parent iff some proper subset S of Mb(x) \ {y} makes x and y
/// independent; subsets are tried smallest first and the first hit is kept
/// as the separating set. A cached result is filtered to the current
/// boundary and costs no tests.
[[nodiscard]] NeighborInfo find_neighbors(Var x, const VarSet& mb_x, CiOracle& oracle,
                                          MarvelCaches& caches);

/// v-structures x -> y <- t for co-parents t and neighbours y: y is outside
/// the separating set of (x, t) and no S inside Mb(x) + {x} \ {y, t}
/// separates y and t.
[[nodiscard]] VStructSet find_vpa(Var x, const NeighborInfo& info, const VarSet& mb_x,
                                  CiOracle& oracle, MarvelCaches& caches);

/// Condition 1: every pair of neighbours stays dependent given S + {x} for
/// all S inside Mb(x) minus the pair. Stops at the first independence.
[[nodiscard]] bool check_condition1(Var x, const NeighborInfo& info, const VarSet& mb_x,
                                    CiOracle& oracle, MarvelCaches& caches);

/// Condition 2, valid only once Condition 1 holds for x (StateError
/// otherwise): for each x -> y <- t and neighbour z != y, z and t stay
/// dependent given S + {x, y} for all S inside Mb(x) \ {z, y, t}.
[[nodiscard]] bool check_condition2(Var x, const NeighborInfo& info, const VStructSet& vpa,
                                    const VarSet& mb_x, CiOracle& oracle, MarvelCaches& caches);

struct RemovabilityVerdict {
    bool removable = false;
    bool condition1 = false;
    NeighborInfo info;
    VStructSet vpa;
};

/// find_neighbors, Condition 1, find_vpa and Condition 2 in that order.
[[nodiscard]] RemovabilityVerdict is_removable_ci(Var x, const VarSet& mb_x, CiOracle& oracle,
                                                  MarvelCaches& caches);

struct LearnOptions {
    bool use_caches = true;
};

/// One removability evaluation performed during a run.
struct ScanRecord {
    int iteration = 0;
    Var var = 0;
    std::size_t mb_size = 0;
    bool condition1 = false;
    bool removable = false;

    friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

struct LearnResult {
    Pdag essential;
    /// Order in which variables were eliminated (PC: processing order).
    std::vector<Var> elimination_order;
    /// Tests the learner performed, excluding Markov boundary discovery.
    CiStats tests;
    std::vector<std::string> warnings;
    std::vector<ScanRecord> scans;

    friend bool operator==(const LearnResult&, const LearnResult&) = default;
};

/// Recursive elimination of removable variables starting from the given
/// Markov boundaries, followed by Meek completion of the learned skeleton
/// and v-structures.
///
/// When a full scan finds no removable variable (possible only with an
/// unreliable oracle) the variable with the smallest boundary is removed
/// anyway and a warning is recorded.
[[nodiscard]] LearnResult marvel_learn(CiOracle& oracle, const MbMap& mb0,
                                       const LearnOptions& opts = {});

/// Worst-case number of tests after Markov boundary discovery:
/// p C(d, 2) + (p / 2) d (1 + 0.45 d) 2^d, rounded up.
[[nodiscard]] std::uint64_t ci_budget_bound(std::uint64_t p, std::uint64_t delta_in);

}  // namespace marvel
