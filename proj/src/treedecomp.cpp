#include "spanlab/treedecomp.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace spanlab {

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
}

int NiceTree::width() const {
    int w = -1;
    for (const auto& n : nodes) w = std::max(w, static_cast<int>(n.bag.size()) - 1);
    return w;
}

TdVerdict validate_td(const Graph& g, const TreeDecomposition& td) {
    int nb = td.num_nodes();
    if (nb == 0) return {false, "decomposition has no nodes"};
    for (const auto& b : td.bags)
        for (int v : b)
            if (v < 0 || v >= g.n)
                return {false, "bag vertex " + std::to_string(v) + " out of range"};
    // Tree check: nb-1 edges, connected.
    if (static_cast<int>(td.treeEdges.size()) != nb - 1)
        return {false, "tree has " + std::to_string(td.treeEdges.size()) + " edges for " +
                           std::to_string(nb) + " nodes"};
    {
        std::vector<std::vector<int>> nadj(nb);
        for (auto [a, b] : td.treeEdges) {
            if (a < 0 || b < 0 || a >= nb || b >= nb || a == b)
                return {false, "bad tree edge {" + std::to_string(a) + "," + std::to_string(b) + "}"};
            nadj[a].push_back(b);
            nadj[b].push_back(a);
        }
        std::vector<char> seen(nb, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : nadj[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    ++cnt;
                    stack.push_back(y);
                }
        }
        if (cnt != nb) return {false, "decomposition tree is not connected"};
    }
    // Vertex condition.
    std::vector<char> covered(g.n, 0);
    for (const auto& b : td.bags)
        for (int v : b) covered[v] = 1;
    for (int v = 0; v < g.n; ++v)
        if (!covered[v]) return {false, "vertex " + std::to_string(v) + " is in no bag"};
    // Edge condition.
    for (auto [u, v] : g.edges) {
        bool found = false;
        for (const auto& b : td.bags)
            if (std::binary_search(b.begin(), b.end(), u) &&
                std::binary_search(b.begin(), b.end(), v)) {
                found = true;
                break;
            }
        if (!found)
            return {false, "edge {" + std::to_string(u) + "," + std::to_string(v) +
                               "} is in no bag"};
    }
    // Coherence: nodes holding v induce a connected subtree.
    {
        std::vector<std::vector<int>> nadj(nb);
        for (auto [a, b] : td.treeEdges) {
            nadj[a].push_back(b);
            nadj[b].push_back(a);
        }
        for (int v = 0; v < g.n; ++v) {
            int start = -1, total = 0;
            for (int i = 0; i < nb; ++i)
                if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), v)) {
                    if (start < 0) start = i;
                    ++total;
                }
            if (start < 0) continue;
            std::vector<char> seen(nb, 0);
            std::vector<int> stack{start};
            seen[start] = 1;
            int cnt = 1;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int y : nadj[x])
                    if (!seen[y] &&
                        std::binary_search(td.bags[y].begin(), td.bags[y].end(), v)) {
                        seen[y] = 1;
                        ++cnt;
                        stack.push_back(y);
                    }
            }
            if (cnt != total)
                return {false, "bags holding vertex " + std::to_string(v) +
                                   " are not connected in the tree"};
        }
    }
    return {};
}

namespace {

// Contracts tree edges whose one bag is contained in the other until none
// remain.  Width and the three decomposition properties are unchanged; nice
// trees built from the result stop rebuilding near-identical bags in
// separate branches.
TreeDecomposition simplify_td(const TreeDecomposition& td) {
    int nb = td.num_nodes();
    std::vector<std::vector<int>> bags = td.bags;
    std::vector<std::set<int>> nadj(nb);
    for (auto [a, b] : td.treeEdges) {
        nadj[a].insert(b);
        nadj[b].insert(a);
    }
    std::vector<char> dead(nb, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < nb && !changed; ++a) {
            if (dead[a]) continue;
            for (int b : nadj[a]) {
                if (!std::includes(bags[b].begin(), bags[b].end(), bags[a].begin(),
                                   bags[a].end()))
                    continue;
                for (int c : nadj[a])
                    if (c != b) {
                        nadj[c].erase(a);
                        nadj[c].insert(b);
                        nadj[b].insert(c);
                    }
                nadj[b].erase(a);
                nadj[a].clear();
                dead[a] = 1;
                changed = true;
                break;
            }
        }
    }
    std::vector<int> newId(nb, -1);
    TreeDecomposition out;
    for (int a = 0; a < nb; ++a)
        if (!dead[a]) {
            newId[a] = static_cast<int>(out.bags.size());
            out.bags.push_back(std::move(bags[a]));
        }
    for (int a = 0; a < nb; ++a)
        for (int b : nadj[a])
            if (a < b) out.treeEdges.emplace_back(newId[a], newId[b]);
    return out;
}

// Turns an elimination order into a decomposition: the bag of v is v plus its
// neighbors at elimination time; v's node hangs off the node of the first
// bag member eliminated after it.
TreeDecomposition td_from_elimination(const Graph& g, const std::vector<int>& order) {
    int n = g.n;
    if (n == 0) return {{{}}, {}};
    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : g.edges) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    TreeDecomposition td;
    td.bags.assign(n, {});
    std::vector<char> gone(n, 0);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        std::vector<int> bag{v};
        for (int w : adj[v])
            if (!gone[w]) bag.push_back(w);
        std::sort(bag.begin(), bag.end());
        td.bags[i] = bag;
        // fill: make the live neighborhood a clique
        std::vector<int> live(bag);
        live.erase(std::find(live.begin(), live.end(), v));
        for (std::size_t a = 0; a < live.size(); ++a)
            for (std::size_t b = a + 1; b < live.size(); ++b) {
                adj[live[a]].insert(live[b]);
                adj[live[b]].insert(live[a]);
            }
        gone[v] = 1;
        if (!live.empty()) {
            int parent = *std::min_element(live.begin(), live.end(),
                                           [&](int a, int b) { return pos[a] < pos[b]; });
            td.treeEdges.emplace_back(i, pos[parent]);
        } else if (i + 1 < n) {
            // isolated at elimination time; attach anywhere to keep a tree
            td.treeEdges.emplace_back(i, i + 1);
        }
    }
    return simplify_td(td);
}

} // namespace

TreeDecomposition heuristic_td(const Graph& g) {
    int n = g.n;
    if (n == 0) return {{{}}, {}};
    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : g.edges) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<char> gone(n, 0);
    std::vector<int> order;
    order.reserve(n);
    for (int it = 0; it < n; ++it) {
        int pick = -1;
        long long pickFill = -1;
        for (int v = 0; v < n; ++v) {
            if (gone[v]) continue;
            std::vector<int> live;
            for (int w : adj[v])
                if (!gone[w]) live.push_back(w);
            long long fill = 0;
            for (std::size_t a = 0; a < live.size(); ++a)
                for (std::size_t b = a + 1; b < live.size(); ++b)
                    if (!adj[live[a]].count(live[b])) ++fill;
            if (pick < 0 || fill < pickFill) {
                pick = v;
                pickFill = fill;
            }
        }
        std::vector<int> live;
        for (int w : adj[pick])
            if (!gone[w]) live.push_back(w);
        for (std::size_t a = 0; a < live.size(); ++a)
            for (std::size_t b = a + 1; b < live.size(); ++b) {
                adj[live[a]].insert(live[b]);
                adj[live[b]].insert(live[a]);
            }
        gone[pick] = 1;
        order.push_back(pick);
    }
    return td_from_elimination(g, order);
}

TreeDecomposition exact_td(const Graph& g, const Limits& lim) {
    int n = g.n;
    if (n > lim.exact_td_max_n)
        throw Refusal("exact_td: n=" + std::to_string(n) + " exceeds cap " +
                      std::to_string(lim.exact_td_max_n) + " (use heuristic_td)");
    if (n == 0) return {{{}}, {}};

    // After eliminating a set S, v's neighborhood is everything reachable
    // from v through S, independent of the order inside S.
    std::vector<std::uint32_t> nb(n, 0);
    for (auto [u, v] : g.edges) {
        nb[u] |= 1u << v;
        nb[v] |= 1u << u;
    }
    auto elimDegree = [&](std::uint32_t s, int v) {
        std::uint32_t seen = 1u << v, frontier = nb[v], reached = 0;
        while (frontier) {
            int w = __builtin_ctz(frontier);
            frontier &= frontier - 1;
            if (seen & (1u << w)) continue;
            seen |= 1u << w;
            if (s & (1u << w))
                frontier |= nb[w];
            else
                reached |= 1u << w;
        }
        return __builtin_popcount(reached);
    };

    std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::vector<int> best(full + 1, -1), choice(full + 1, -1);
    best[0] = 0;
    std::vector<std::uint32_t> byCount;
    for (std::uint32_t s = 0; s <= full; ++s) byCount.push_back(s);
    std::sort(byCount.begin(), byCount.end(), [](std::uint32_t a, std::uint32_t b) {
        int ca = __builtin_popcount(a), cb = __builtin_popcount(b);
        return ca != cb ? ca < cb : a < b;
    });
    for (std::uint32_t s : byCount) {
        if (best[s] < 0 || s == full) continue;
        for (int v = 0; v < n; ++v) {
            if (s & (1u << v)) continue;
            int w = std::max(best[s], elimDegree(s, v));
            std::uint32_t s2 = s | (1u << v);
            if (best[s2] < 0 || w < best[s2]) {
                best[s2] = w;
                choice[s2] = v;
            }
        }
    }
    std::vector<int> order(n);
    std::uint32_t s = full;
    for (int i = n - 1; i >= 0; --i) {
        order[i] = choice[s];
        s &= ~(1u << order[i]);
    }
    return td_from_elimination(g, order);
}

TreeDecomposition square_td(const Graph& g, const TreeDecomposition& td) {
    auto verdict = validate_td(g, td);
    if (!verdict.ok)
        throw ContractError("square_td: input decomposition invalid: " + verdict.message);
    TreeDecomposition out;
    out.treeEdges = td.treeEdges;
    out.bags.reserve(td.bags.size());
    for (const auto& b : td.bags) {
        std::vector<int> grown(b);
        for (int v : b)
            for (int w : g.adj[v]) grown.push_back(w);
        std::sort(grown.begin(), grown.end());
        grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
        out.bags.push_back(std::move(grown));
    }
    out = simplify_td(out);
    int t = td.width(), d = max_degree(g);
    if (out.width() > (t + 1) * d + t)
        throw Error("square_td: internal error, width bound violated");
    return out;
}

namespace {

struct NiceBuilder {
    const Graph* g = nullptr;
    const TreeDecomposition* td = nullptr;
    std::vector<std::vector<int>> tdChildren;
    NiceTree out;
    std::set<std::pair<int, int>> introducedEdges;

    int add(NiceNode node) {
        out.nodes.push_back(std::move(node));
        return static_cast<int>(out.nodes.size()) - 1;
    }

    // Appends IntroduceVertex(v) on top of `below` (bag = below's bag + v),
    // then eagerly introduces v's edges into the new bag.  The same edge is
    // reintroduced in every branch where the endpoints coexist afresh: the
    // gap filter is idempotent, and a branch left unfiltered would otherwise
    // carry the full (k+1)^|bag| product to its join.
    int introduce(int below, int v) {
        std::vector<int> bag = out.nodes[below].bag;
        bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
        NiceNode iv;
        iv.kind = NodeKind::IntroduceVertex;
        iv.v = v;
        iv.bag = bag;
        iv.children = {below};
        int top = add(std::move(iv));
        for (int u : bag) {
            if (u == v) continue;
            std::pair<int, int> key{std::min(u, v), std::max(u, v)};
            if (!g->has_edge(u, v)) continue;
            introducedEdges.insert(key);
            NiceNode ie;
            ie.kind = NodeKind::IntroduceEdge;
            ie.u = key.first;
            ie.v = key.second;
            ie.edgeIndex = static_cast<int>(
                std::lower_bound(g->edges.begin(), g->edges.end(), key) - g->edges.begin());
            ie.bag = bag;
            ie.children = {top};
            top = add(std::move(ie));
        }
        return top;
    }

    int forget(int below, int v) {
        std::vector<int> bag = out.nodes[below].bag;
        bag.erase(std::find(bag.begin(), bag.end(), v));
        NiceNode f;
        f.kind = NodeKind::Forget;
        f.v = v;
        f.bag = std::move(bag);
        f.children = {below};
        return add(std::move(f));
    }

    // Morphs the chain top `below` from its bag to `target`:
    // forget extras descending, then introduce missing ascending.
    int morph(int below, const std::vector<int>& target) {
        std::vector<int> extras, missing;
        for (int v : out.nodes[below].bag)
            if (!std::binary_search(target.begin(), target.end(), v)) extras.push_back(v);
        for (int v : target)
            if (!std::binary_search(out.nodes[below].bag.begin(), out.nodes[below].bag.end(), v))
                missing.push_back(v);
        for (auto it = extras.rbegin(); it != extras.rend(); ++it) below = forget(below, *it);
        for (int v : missing) below = introduce(below, v);
        return below;
    }

    int build(int tdNode, int tdParent) {
        std::vector<int> tops;
        for (int c : tdChildren[tdNode])
            if (c != tdParent) tops.push_back(morph(build(c, tdNode), td->bags[tdNode]));
        if (tops.empty()) {
            int leaf = add(NiceNode{}); // Leaf, empty bag
            int top = leaf;
            for (int v : td->bags[tdNode]) top = introduce(top, v);
            return top;
        }
        int acc = tops[0];
        for (std::size_t i = 1; i < tops.size(); ++i) {
            NiceNode j;
            j.kind = NodeKind::Join;
            j.bag = td->bags[tdNode];
            j.children = {acc, tops[i]};
            acc = add(std::move(j));
        }
        return acc;
    }
};

} // namespace

NiceTree make_nice(const Graph& g, const TreeDecomposition& td) {
    auto verdict = validate_td(g, td);
    if (!verdict.ok)
        throw ContractError("make_nice: input decomposition invalid: " + verdict.message);
    NiceBuilder nb;
    nb.g = &g;
    nb.td = &td;
    nb.tdChildren.assign(td.num_nodes(), {});
    for (auto [a, b] : td.treeEdges) {
        nb.tdChildren[a].push_back(b);
        nb.tdChildren[b].push_back(a);
    }
    for (auto& c : nb.tdChildren) std::sort(c.begin(), c.end());
    int top = nb.build(0, -1);
    // Drain the root bag so the overall root is empty.
    auto bag = nb.out.nodes[top].bag;
    for (auto it = bag.rbegin(); it != bag.rend(); ++it) top = nb.forget(top, *it);
    if (nb.introducedEdges.size() != g.edges.size())
        throw Error("make_nice: internal error, some edge was never introduced");
    return std::move(nb.out);
}

} // namespace spanlab
