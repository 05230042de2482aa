#pragma once

#include <utility>
#include <vector>

#include "spanlab/graph.hpp"
#include "spanlab/labeling.hpp"
#include "spanlab/limits.hpp"

namespace spanlab {

// Removes every edge with both endpoints outside x.  Each such edge joins
// true twins when x is a twin cover, which is required (ContractError
// otherwise).  The vertex set is unchanged and x is a vertex cover of the
// result.
Graph delete_twin_edges(const Graph& g, const std::vector<int>& x);

// Minimum L(1,1) span and witness for a connected graph, via twin-edge
// deletion.  An empty minimum cover (the graph is a clique) is promoted to a
// single anchor vertex: deleting every edge of an anchorless clique would
// collapse its distance-2 structure, while keeping one cover vertex
// preserves closed 2-neighborhoods exactly.  The reduced graph is solved by
// the exact track (DP beyond its cap) and the witness is re-verified against
// the original graph before returning.
std::pair<int, Labeling> lambda_l11(const Graph& g, const Limits& lim = default_limits());

// Fixed-parameter p-approximation for L(p,1): scales an optimal L(1,1)
// labeling by p.  The result is a valid L(p,p) (hence L(p,1)) labeling with
// span p * lambda_{1,1}(g) <= p * lambda_{p,1}(g).
std::pair<int, Labeling> approx_lp1(const Graph& g, int p,
                                    const Limits& lim = default_limits());

} // namespace spanlab
