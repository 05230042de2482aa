#include "spanlab/twincover.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace spanlab {

namespace {

// Sorted closed neighborhoods, for twin tests.
std::vector<std::vector<int>> closed_neighborhoods(const Graph& g) {
    std::vector<std::vector<int>> cn(g.n);
    for (int v = 0; v < g.n; ++v) {
        cn[v] = g.adj[v];
        cn[v].insert(std::lower_bound(cn[v].begin(), cn[v].end(), v), v);
    }
    return cn;
}

} // namespace

std::vector<std::pair<int, int>> twin_edges(const Graph& g) {
    auto cn = closed_neighborhoods(g);
    std::vector<std::pair<int, int>> out;
    for (auto [u, v] : g.edges)
        if (cn[u] == cn[v]) out.emplace_back(u, v);
    return out;
}

bool is_twin_cover(const Graph& g, const std::vector<int>& x) {
    std::vector<char> in(g.n, 0);
    for (int v : x) {
        if (v < 0 || v >= g.n) throw ContractError("is_twin_cover: vertex out of range");
        in[v] = 1;
    }
    auto cn = closed_neighborhoods(g);
    for (auto [u, v] : g.edges)
        if (!in[u] && !in[v] && cn[u] != cn[v]) return false;
    return true;
}

namespace {

struct CoverSearch {
    const Graph* g = nullptr;
    std::vector<std::pair<int, int>> open; // non-twin edges
    std::vector<char> chosen;
    int chosenCount = 0;
    int best;               // best cover size found, budget+1 if none yet
    std::vector<int> bestSet;
    int budget = 0;

    bool covered(const std::pair<int, int>& e) const {
        return chosen[e.first] || chosen[e.second];
    }

    int matching_lower_bound() const {
        std::vector<char> used(g->n, 0);
        int m = 0;
        for (const auto& e : open)
            if (!covered(e) && !used[e.first] && !used[e.second]) {
                used[e.first] = used[e.second] = 1;
                ++m;
            }
        return m;
    }

    void dfs() {
        if (chosenCount + matching_lower_bound() >= best) return;
        // Branch on the uncovered edge with the largest degree sum.
        int pick = -1, score = -1;
        for (int i = 0; i < static_cast<int>(open.size()); ++i)
            if (!covered(open[i])) {
                int s = g->degree(open[i].first) + g->degree(open[i].second);
                if (s > score) {
                    score = s;
                    pick = i;
                }
            }
        if (pick < 0) {
            best = chosenCount;
            bestSet.clear();
            for (int v = 0; v < g->n; ++v)
                if (chosen[v]) bestSet.push_back(v);
            return;
        }
        if (chosenCount >= budget) return;
        for (int v : {open[pick].first, open[pick].second}) {
            chosen[v] = 1;
            ++chosenCount;
            dfs();
            --chosenCount;
            chosen[v] = 0;
        }
    }
};

} // namespace

std::vector<int> min_twin_cover(const Graph& g, const Limits& lim) {
    CoverSearch cs;
    cs.g = &g;
    auto twins = twin_edges(g);
    for (auto e : g.edges)
        if (!std::binary_search(twins.begin(), twins.end(), e)) cs.open.push_back(e);
    cs.chosen.assign(g.n, 0);
    cs.budget = lim.twin_cover_depth;
    cs.best = cs.budget + 1;
    cs.dfs();
    if (cs.best > cs.budget)
        throw Refusal("min_twin_cover: no cover within depth budget " +
                      std::to_string(cs.budget));
    return cs.bestSet;
}

int TypeInfo::omega() const {
    int w = 0;
    for (const auto& c : cliques) w = std::max(w, static_cast<int>(c.size()));
    return w;
}

TwinCoverContext type_partition(const Graph& g, const std::vector<int>& x) {
    if (!is_twin_cover(g, x))
        throw ContractError("type_partition: given set is not a twin cover");
    std::vector<char> in(g.n, 0);
    for (int v : x) in[v] = 1;

    // Components of the graph minus the cover; each must be a clique.
    std::vector<int> comp(g.n, -1);
    int numComp = 0;
    for (int v = 0; v < g.n; ++v) {
        if (in[v] || comp[v] >= 0) continue;
        std::vector<int> stack{v};
        comp[v] = numComp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.adj[u])
                if (!in[w] && comp[w] < 0) {
                    comp[w] = numComp;
                    stack.push_back(w);
                }
        }
        ++numComp;
    }
    std::vector<std::vector<int>> comps(numComp);
    for (int v = 0; v < g.n; ++v)
        if (!in[v]) comps[comp[v]].push_back(v);
    for (const auto& c : comps)
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                if (!g.has_edge(c[i], c[j]))
                    throw Error("type_partition: internal error, outside component not a clique");

    // Group members (and their cliques) by neighborhood inside the cover.
    std::map<std::vector<int>, TypeInfo> byNbhd;
    for (int v = 0; v < g.n; ++v) {
        if (in[v]) continue;
        std::vector<int> key;
        for (int w : g.adj[v])
            if (in[w]) key.push_back(w);
        byNbhd[key].members.push_back(v);
    }
    for (const auto& c : comps) {
        std::vector<int> key;
        for (int w : g.adj[c[0]])
            if (in[w]) key.push_back(w);
        auto it = byNbhd.find(key);
        if (it == byNbhd.end())
            throw Error("type_partition: internal error, clique without its type");
        for (int v : c)
            if (!std::binary_search(it->second.members.begin(), it->second.members.end(), v))
                throw Error("type_partition: internal error, clique splits across types");
        it->second.cliques.push_back(c);
    }

    TwinCoverContext ctx;
    ctx.cover = x;
    std::sort(ctx.cover.begin(), ctx.cover.end());
    ctx.cover.erase(std::unique(ctx.cover.begin(), ctx.cover.end()), ctx.cover.end());
    for (auto& [key, info] : byNbhd) {
        info.nbhd = key;
        std::sort(info.cliques.begin(), info.cliques.end());
        ctx.types.push_back(std::move(info));
    }
    return ctx;
}

TwinCoverContext augment_cover(const Graph& g, const TwinCoverContext& ctx, int p) {
    if (p < 1) throw ContractError("augment_cover: p must be >= 1");
    std::vector<int> x2 = ctx.cover;
    int maxOmega = 1;
    for (const auto& t : ctx.types) {
        maxOmega = std::max(maxOmega, t.omega());
        if (static_cast<long long>(t.omega()) * p > t.size())
            x2.insert(x2.end(), t.members.begin(), t.members.end());
    }
    auto out = type_partition(g, x2);
    for (const auto& t : out.types)
        if (static_cast<long long>(t.omega()) * p > t.size())
            throw Error("augment_cover: internal error, oversized clique survived");
    if (ctx.cover.size() <= 30) {
        // Growth bound: at most one absorbed type per cover subset, each of
        // size < p * maxOmega.
        unsigned long long cap = ctx.cover.size() +
            (1ull << ctx.cover.size()) * static_cast<unsigned long long>(p) * maxOmega;
        if (out.cover.size() > cap)
            throw Error("augment_cover: internal error, cover grew past its bound");
    }
    return out;
}

} // namespace spanlab
