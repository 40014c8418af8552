#pragma once

#include "marvel/ci.hpp"
#include "marvel/learner.hpp"
#include "marvel/mb.hpp"

namespace marvel {

/// PC started from the moral graph implied by `mb0` instead of the complete
/// graph.
///
/// Edge removal runs in rounds of conditioning-set size l = 0, 1, ...; in
/// each round variables are visited in ascending order and every remaining
/// neighbour y of x is tested against the size-l subsets of adj(x) \ {y},
/// with adjacencies updated immediately. v-structures follow the sepset
/// rule and the result is Meek-completed.
[[nodiscard]] LearnResult pc_baseline(CiOracle& oracle, const MbMap& mb0);

}  // namespace marvel
