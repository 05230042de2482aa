#pragma once

#include <string>
#include <vector>

#include "spanlab/graph.hpp"

namespace spanlab {

// Tree decomposition: one bag per node, tree edges between node ids.
struct TreeDecomposition {
    std::vector<std::vector<int>> bags;        // each sorted
    std::vector<std::pair<int, int>> treeEdges;

    int num_nodes() const { return static_cast<int>(bags.size()); }
    int width() const;
};

struct TdVerdict {
    bool ok = true;
    std::string message; // names the first failing condition and a witness
};

// Checks the tree is a tree and the three decomposition conditions hold:
// every vertex in a bag, every edge inside some bag, per-vertex bags connected.
TdVerdict validate_td(const Graph& g, const TreeDecomposition& td);

// Min-fill elimination heuristic.  Never optimal-guaranteed, always valid.
TreeDecomposition heuristic_td(const Graph& g);

// Exact treewidth via subset DP over elimination prefixes.
// Refuses graphs larger than lim.exact_td_max_n.
TreeDecomposition exact_td(const Graph& g, const Limits& lim = default_limits());

// Same tree, bags grown to bag + N(bag): a decomposition of square(g).
// Width grows to at most (t+1)*Delta + t from width t.
TreeDecomposition square_td(const Graph& g, const TreeDecomposition& td);

enum class NodeKind { Leaf, IntroduceVertex, IntroduceEdge, Forget, Join };

struct NiceNode {
    NodeKind kind = NodeKind::Leaf;
    int v = -1;                // IntroduceVertex / Forget vertex, or edge endpoint
    int u = -1;                // second endpoint for IntroduceEdge (u < v)
    int edgeIndex = -1;        // IntroduceEdge: index into the graph's edge list
    std::vector<int> bag;      // sorted
    std::vector<int> children; // node ids
};

// Rooted at nodes.back(); root and leaf bags are empty; every edge of the
// graph is introduced at least once, and once per branch where its endpoints
// coexist (the edge filter is idempotent).
struct NiceTree {
    std::vector<NiceNode> nodes;
    int root() const { return static_cast<int>(nodes.size()) - 1; }
    int width() const;
};

// Deterministic nice form of a valid decomposition of g: vertices are
// introduced in ascending order, forgotten in descending order, each edge
// introduced directly after the introduction that makes its endpoints
// coexist, joins folded left over children in index order.
NiceTree make_nice(const Graph& g, const TreeDecomposition& td);

} // namespace spanlab
