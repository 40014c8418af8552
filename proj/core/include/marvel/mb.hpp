#pragma once

#include <iosfwd>
#include <vector>

#include "marvel/ci.hpp"
#include "marvel/var_set.hpp"

namespace marvel {

/// Markov boundaries of the variables that have not been removed yet.
///
/// Membership is symmetric, a variable never belongs to its own boundary,
/// and removed variables appear in no boundary.
class MbMap {
public:
    MbMap() = default;
    explicit MbMap(int p);

    [[nodiscard]] int p() const { return static_cast<int>(mb_.size()); }
    [[nodiscard]] const VarSet& mb(Var x) const { return mb_.at(static_cast<std::size_t>(x)); }
    [[nodiscard]] const VarSet& removed() const { return removed_; }
    [[nodiscard]] bool is_removed(Var x) const { return removed_.contains(x); }
    [[nodiscard]] VarSet remaining() const { return VarSet::range(p()).minus(removed_); }

    /// Adds y to Mb(x) and x to Mb(y).
    void link(Var x, Var y);
    /// Drops y from Mb(x) and x from Mb(y).
    void unlink(Var x, Var y);
    /// Deletes x from every boundary and marks it removed.
    void remove(Var x);

    /// Checks symmetry, irreflexivity and disjointness from the removed set.
    [[nodiscard]] bool consistent() const;

    friend bool operator==(const MbMap&, const MbMap&) = default;

private:
    void check(Var x) const;

    std::vector<VarSet> mb_;
    VarSet removed_;
};

/// Debug dump, one `x: {...}` line per remaining variable.
std::ostream& operator<<(std::ostream& os, const MbMap& m);

/// Markov boundaries by total conditioning: one test per unordered pair
/// {x, y} given every other variable in `variables`. Variables outside
/// `variables` are reported as removed.
[[nodiscard]] MbMap total_conditioning(CiOracle& oracle, const VarSet& variables);
/// Total conditioning over all of 0..p-1.
[[nodiscard]] MbMap total_conditioning(CiOracle& oracle, int p);

/// Removes x and repairs the boundaries it leaves behind.
///
/// Every pair {y, z} of x's neighbours that are still in each other's
/// boundary is retested given Mb(w) \ {x, y, z}, where w is whichever of y, z
/// has the smaller boundary (smaller index on ties). Independence unlinks
/// the pair. Throws StateError if x was already removed.
void update_after_removal(MbMap& m, Var x, const VarSet& neighbors, CiOracle& oracle);

}  // namespace marvel
