#pragma once

#include <vector>

#include "spanlab/graph.hpp"

namespace spanlab {

// Edges {u,v} whose endpoints are true twins: N[u] = N[v].
std::vector<std::pair<int, int>> twin_edges(const Graph& g);

// X is a twin cover iff every edge has an endpoint in X or is a twin edge.
bool is_twin_cover(const Graph& g, const std::vector<int>& x);

// Exact minimum twin cover, i.e. minimum vertex cover of the non-twin edges,
// by two-way branching with a matching lower bound.  Refuses when the
// minimum exceeds lim.twin_cover_depth.
std::vector<int> min_twin_cover(const Graph& g, const Limits& lim = default_limits());

// One equivalence class of cover-outside vertices: all share the same
// neighborhood inside the cover and split into disjoint cliques.
struct TypeInfo {
    std::vector<int> members;              // sorted
    std::vector<int> nbhd;                 // N(type) inside the cover, sorted
    std::vector<std::vector<int>> cliques; // partition of members, each sorted
    int size() const { return static_cast<int>(members.size()); }
    int omega() const;                     // largest clique size
};

struct TwinCoverContext {
    std::vector<int> cover; // sorted
    std::vector<TypeInfo> types; // sorted by (nbhd, members)
};

// Groups V minus X by neighborhood inside X.  Validates that x really is a
// twin cover (ContractError otherwise) and that the outside components are
// cliques lying inside single types.
TwinCoverContext type_partition(const Graph& g, const std::vector<int>& x);

// Moves every type with omega_i * p > n_i (strictly) into the cover and
// re-partitions.  Surviving types all satisfy p * omega_i <= n_i.
TwinCoverContext augment_cover(const Graph& g, const TwinCoverContext& ctx, int p);

} // namespace spanlab
