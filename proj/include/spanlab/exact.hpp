#pragma once

#include <optional>
#include <utility>

#include "spanlab/labeling.hpp"

namespace spanlab {

// Plain backtracking oracle over labels {0..k}.  Vertices are tried in a
// degeneracy order of the square graph; labels ascend, so the witness is the
// lexicographically smallest under that order.  The only pruning beyond the
// gap checks is the f -> k-f reflection symmetry on the first vertex.
// Connected graphs only; n capped by lim.exact_max_n.
std::optional<Labeling> decide_exact(const Graph& g, const PqParams& params, int k,
                                     const Limits& lim = default_limits());

// Smallest k with a feasible labeling, plus a witness.  Starts the scan at
// the degree lower bound when q = 1, at 0 otherwise.
std::pair<int, Labeling> lambda_exact(const Graph& g, const PqParams& params,
                                      const Limits& lim = default_limits());

} // namespace spanlab
