// greedy.hpp - oracle-backed decomposers: greedy longest-prefix peeling with
// minimum fault sets (tiling and alternating forms) and the additive
// baseline that masks all but k faults up front. Exponential via the oracle;
// these exist as ground truth for the polynomial decomposer.
#pragma once

#include <optional>
#include <span>

#include "restoration/oracle.hpp"

namespace restoration {

// Peels the longest prefix of the remaining path whose minimum fault set
// fits the budget, repeatedly. Every returned fault set is the oracle
// minimum for its subpath, and extending any non-final subpath by one vertex
// pushes its minimum past the budget. Requires budget >= 1.
Decomposition greedy_decompose(const ReplacementInstance& inst, int budget);
Decomposition greedy_decompose(FaultOracle& oracle, int budget);

// Weighted/alternating variant: when the next pi edge cannot be absorbed it
// becomes a separator instead, so subpaths may be empty. Requires
// budget >= 1 (a zero budget can stall on an edge that is heavy only
// because every detour around it is faulty).
Decomposition greedy_decompose_weighted(const ReplacementInstance& inst, int budget);
Decomposition greedy_decompose_weighted(FaultOracle& oracle, int budget);

// Masks the first |F|-k faults of `order` (canonical order by default)
// everywhere and peels subpaths that are shortest in that fixed graph. At
// most k+1 subpaths on unweighted instances; every fault set equals the
// masked prefix. Throws std::runtime_error if peeling stalls, which only
// weighted instances can trigger.
Decomposition baseline_decompose(const ReplacementInstance& inst, int k,
                                 std::span<const Edge> order = {});

}  // namespace restoration
