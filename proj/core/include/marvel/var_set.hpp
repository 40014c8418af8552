#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <span>
#include <vector>

namespace marvel {

/// Variable index. Vertices of every graph are dense in [0, p).
using Var = int;

/// Ordered set of variable indices backed by a sorted vector.
///
/// Iteration is always ascending, so any enumeration derived from a VarSet
/// is deterministic.
class VarSet {
public:
    using const_iterator = std::vector<Var>::const_iterator;

    VarSet() = default;
    VarSet(std::initializer_list<Var> vars) : items_(vars) { normalize(); }
    explicit VarSet(std::vector<Var> vars) : items_(std::move(vars)) { normalize(); }

    /// {0, 1, ..., p-1}
    static VarSet range(int p) {
        VarSet s;
        s.items_.reserve(static_cast<std::size_t>(std::max(p, 0)));
        for (Var v = 0; v < p; ++v) s.items_.push_back(v);
        return s;
    }

    /// Builds from an already sorted, duplicate-free sequence.
    static VarSet from_sorted(std::vector<Var> sorted) {
        VarSet s;
        s.items_ = std::move(sorted);
        return s;
    }

    [[nodiscard]] bool contains(Var v) const {
        return std::binary_search(items_.begin(), items_.end(), v);
    }
    [[nodiscard]] std::size_t size() const { return items_.size(); }
    [[nodiscard]] bool empty() const { return items_.empty(); }
    [[nodiscard]] const_iterator begin() const { return items_.begin(); }
    [[nodiscard]] const_iterator end() const { return items_.end(); }
    [[nodiscard]] Var operator[](std::size_t i) const { return items_[i]; }
    [[nodiscard]] std::span<const Var> view() const { return items_; }
    [[nodiscard]] const std::vector<Var>& items() const { return items_; }

    bool insert(Var v) {
        auto it = std::lower_bound(items_.begin(), items_.end(), v);
        if (it != items_.end() && *it == v) return false;
        items_.insert(it, v);
        return true;
    }

    bool erase(Var v) {
        auto it = std::lower_bound(items_.begin(), items_.end(), v);
        if (it == items_.end() || *it != v) return false;
        items_.erase(it);
        return true;
    }

    void clear() { items_.clear(); }

    [[nodiscard]] VarSet without(Var v) const {
        VarSet r = *this;
        r.erase(v);
        return r;
    }

    [[nodiscard]] VarSet without(std::initializer_list<Var> vs) const {
        VarSet r = *this;
        for (Var v : vs) r.erase(v);
        return r;
    }

    [[nodiscard]] VarSet with(Var v) const {
        VarSet r = *this;
        r.insert(v);
        return r;
    }

    [[nodiscard]] VarSet united(const VarSet& o) const {
        std::vector<Var> out;
        out.reserve(items_.size() + o.items_.size());
        std::set_union(items_.begin(), items_.end(), o.items_.begin(), o.items_.end(),
                       std::back_inserter(out));
        return from_sorted(std::move(out));
    }

    [[nodiscard]] VarSet intersected(const VarSet& o) const {
        std::vector<Var> out;
        std::set_intersection(items_.begin(), items_.end(), o.items_.begin(), o.items_.end(),
                              std::back_inserter(out));
        return from_sorted(std::move(out));
    }

    [[nodiscard]] VarSet minus(const VarSet& o) const {
        std::vector<Var> out;
        std::set_difference(items_.begin(), items_.end(), o.items_.begin(), o.items_.end(),
                            std::back_inserter(out));
        return from_sorted(std::move(out));
    }

    [[nodiscard]] bool is_subset_of(const VarSet& o) const {
        return std::includes(o.items_.begin(), o.items_.end(), items_.begin(), items_.end());
    }

    friend bool operator==(const VarSet&, const VarSet&) = default;
    friend auto operator<=>(const VarSet& a, const VarSet& b) { return a.items_ <=> b.items_; }

private:
    void normalize() {
        std::sort(items_.begin(), items_.end());
        items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
    }

    std::vector<Var> items_;
};

inline std::ostream& operator<<(std::ostream& os, const VarSet& s) {
    os << '{';
    bool first = true;
    for (Var v : s) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    return os << '}';
}

/// Subsets of `items` with exactly `k` members, lexicographic.
template <class Visitor>
bool for_each_subset_of_size(const VarSet& items, int k, Visitor&& visit) {
    const auto n = static_cast<int>(items.size());
    if (k < 0 || k > n) return false;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::vector<Var> buf;
    while (true) {
        buf.clear();
        for (int i : idx) buf.push_back(items[static_cast<std::size_t>(i)]);
        if (visit(VarSet::from_sorted(buf))) return true;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

/// Visits subsets of `items` in increasing cardinality, lexicographic within
/// a cardinality. `visit` returns true to stop early. When `proper` is set the
/// full set itself is skipped. Returns true iff the visitor stopped early.
template <class Visitor>
bool for_each_subset(const VarSet& items, Visitor&& visit, bool proper = false) {
    const auto n = static_cast<int>(items.size());
    const int max_k = proper ? n - 1 : n;
    for (int k = 0; k <= max_k; ++k)
        if (for_each_subset_of_size(items, k, visit)) return true;
    return false;
}

}  // namespace marvel
