#include "spanlab/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <string>

namespace spanlab {

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

Graph new_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw ContractError("new_graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ContractError("new_graph: edge endpoint out of range: {" +
                                std::to_string(u) + "," + std::to_string(v) + "}");
        if (u == v)
            throw ContractError("new_graph: self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.n = n;
    g.edges = std::move(edges);
    g.adj.assign(n, {});
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    auto dist = bfs_distances(g, 0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

void require_connected(const Graph& g, const char* who) {
    if (!is_connected(g))
        throw DisconnectedError(std::string(who) + ": input graph is disconnected");
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.n; ++v) d = std::max(d, g.degree(v));
    return d;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    if (src < 0 || src >= g.n) throw ContractError("bfs_distances: source out of range");
    std::vector<int> dist(g.n, -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

std::vector<std::pair<int, int>> distance2_pairs(const Graph& g) {
    // u and v are at distance exactly 2 iff non-adjacent with a common neighbor.
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.n; ++u)
        for (int w : g.adj[u])
            for (int v : g.adj[w])
                if (v > u && !g.has_edge(u, v)) out.emplace_back(u, v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SquareGraph square_graph(const Graph& g) {
    std::vector<std::pair<int, int>> e2 = g.edges;
    auto d2 = distance2_pairs(g);
    e2.insert(e2.end(), d2.begin(), d2.end());

    SquareGraph s;
    s.square = new_graph(g.n, e2);
    s.gap.reserve(s.square.edges.size());
    for (auto [u, v] : s.square.edges)
        s.gap.push_back(g.has_edge(u, v) ? GapClass::Dist1 : GapClass::Dist2);
    return s;
}

namespace {

// Bron-Kerbosch style max-clique on <=64 vertices packed into a word.
struct CliqueSearch {
    std::vector<std::uint64_t> nb;
    int best = 0;

    void run(std::uint64_t cand, int depth) {
        if (cand == 0) {
            best = std::max(best, depth);
            return;
        }
        std::uint64_t rest = cand;
        while (rest) {
            if (depth + __builtin_popcountll(rest) <= best) return;
            int v = __builtin_ctzll(rest);
            rest &= rest - 1;
            run(cand & nb[v], depth + 1);
            cand &= ~(std::uint64_t{1} << v);
        }
    }
};

} // namespace

int max_clique_size(const Graph& g, const Limits& lim) {
    if (g.n > lim.clique_max_n)
        throw Refusal("max_clique_size: n=" + std::to_string(g.n) + " exceeds cap " +
                      std::to_string(lim.clique_max_n) +
                      " (raise the cap or use a heuristic estimate)");
    if (g.n == 0) return 0;
    CliqueSearch cs;
    cs.nb.assign(g.n, 0);
    for (auto [u, v] : g.edges) {
        cs.nb[u] |= std::uint64_t{1} << v;
        cs.nb[v] |= std::uint64_t{1} << u;
    }
    std::uint64_t all = (g.n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.n) - 1);
    cs.run(all, 0);
    return cs.best;
}

std::vector<int> degeneracy_order(const Graph& g) {
    std::vector<int> deg(g.n), order;
    std::vector<char> gone(g.n, 0);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    order.reserve(g.n);
    // Repeatedly strip a minimum-degree vertex; the reversed strip order is
    // the labeling order, so late-stripped (core) vertices come first.
    for (int it = 0; it < g.n; ++it) {
        int pick = -1;
        for (int v = 0; v < g.n; ++v)
            if (!gone[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
        gone[pick] = 1;
        order.push_back(pick);
        for (int w : g.adj[pick])
            if (!gone[w]) --deg[w];
    }
    std::reverse(order.begin(), order.end());
    return order;
}

Graph remove_edges(const Graph& g, const std::vector<std::pair<int, int>>& drop) {
    std::vector<std::pair<int, int>> gone;
    gone.reserve(drop.size());
    for (auto [u, v] : drop) {
        if (!g.has_edge(u, v))
            throw ContractError("remove_edges: edge {" + std::to_string(u) + "," +
                                std::to_string(v) + "} not present");
        gone.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(gone.begin(), gone.end());
    std::vector<std::pair<int, int>> kept;
    kept.reserve(g.edges.size());
    for (auto e : g.edges)
        if (!std::binary_search(gone.begin(), gone.end(), e)) kept.push_back(e);
    return new_graph(g.n, std::move(kept));
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(g.n, 0);
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int w : g.adj[comp[i]])
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> pos(g.n, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        int v = verts[i];
        if (v < 0 || v >= g.n) throw ContractError("induced_subgraph: vertex out of range");
        if (i > 0 && verts[i] <= verts[i - 1])
            throw ContractError("induced_subgraph: vertices must be sorted and distinct");
        pos[v] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges)
        if (pos[u] >= 0 && pos[v] >= 0) edges.emplace_back(pos[u], pos[v]);
    return new_graph(static_cast<int>(verts.size()), std::move(edges));
}

} // namespace spanlab
