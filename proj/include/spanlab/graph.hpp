#pragma once

#include <utility>
#include <vector>

#include "spanlab/errors.hpp"
#include "spanlab/limits.hpp"

namespace spanlab {

// Simple undirected graph on vertices 0..n-1.  Edges are stored normalized
// (u < v), sorted, without duplicates; adjacency lists are sorted.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;

    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
};

// Validates endpoints (0 <= u,v < n, u != v), dedupes, normalizes.
// Disconnected graphs are fine here; solvers reject them at their door.
Graph new_graph(int n, std::vector<std::pair<int, int>> edges);

bool is_connected(const Graph& g);
void require_connected(const Graph& g, const char* who);

int max_degree(const Graph& g);

// BFS distances from src; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, int src);

// All pairs {u,v} (u < v) at distance exactly 2, sorted.
std::vector<std::pair<int, int>> distance2_pairs(const Graph& g);

// Which distance class a square-graph edge came from.
enum class GapClass { Dist1, Dist2 };

// The square of g: same vertices, an edge for every pair at distance <= 2,
// each edge tagged with its class.  gap[i] belongs to square.edges[i].
struct SquareGraph {
    Graph square;
    std::vector<GapClass> gap;
};

SquareGraph square_graph(const Graph& g);

// Exact maximum clique size via branch and bound on bitsets.
// Refuses graphs larger than lim.clique_max_n.
int max_clique_size(const Graph& g, const Limits& lim = default_limits());

// Smallest-last (degeneracy) order; ties broken by smallest index.
std::vector<int> degeneracy_order(const Graph& g);

// g minus the listed edges (each must exist); vertex set unchanged.
Graph remove_edges(const Graph& g, const std::vector<std::pair<int, int>>& drop);

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);

// Subgraph induced by verts (sorted, distinct); vertex i of the result is
// verts[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);

} // namespace spanlab
