#pragma once

#include <optional>

#include "spanlab/labeling.hpp"
#include "spanlab/treedecomp.hpp"

namespace spanlab {

// Dynamic program over a nice decomposition of the square graph.  States are
// bag labelings into {0..k}; introduce-edge nodes apply the p or q gap
// depending on whether the square edge came from distance 1 or 2.
// If td is null a min-fill decomposition of g is computed.  The total number
// of states created is capped by lim.dp_state_budget (Refusal past it).
std::optional<Labeling> decide_dp(const Graph& g, const PqParams& params, int k,
                                  const Limits& lim = default_limits(),
                                  const TreeDecomposition* td = nullptr);

// Smallest feasible k plus witness, scanning k upward like lambda_exact.
// The decomposition is computed once and reused across the scan.
std::pair<int, Labeling> lambda_dp(const Graph& g, const PqParams& params,
                                   const Limits& lim = default_limits(),
                                   const TreeDecomposition* td = nullptr);

} // namespace spanlab
