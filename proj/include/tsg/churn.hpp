#pragma once

#include "tsg/graph_state.hpp"
#include "tsg/types.hpp"

namespace tsg {

/// The churn process is stable once every live vertex was born into a full
/// population, i.e. from round 2n on.
inline bool is_stable(std::uint64_t round, std::uint64_t n) { return round >= 2 * n; }

/// One churn tick: the vertex with id == round joins, and from round n+1 on
/// the vertex born at round - n departs. The departed vertex's requests and
/// incident edges are left in place for the edge process to clean up, and the
/// newborn's slot is initialized afterwards by the same round step.
ChurnEvent advance(GraphState& state, std::uint64_t round);

}  // namespace tsg
