#include "spanlab/exact.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace spanlab {

namespace {

struct Constraint {
    int pos = 0; // index into the vertex order, earlier than the current one
    int gap = 0; // required |difference|
};

struct Backtracker {
    int n = 0, k = 0;
    std::vector<std::vector<Constraint>> cons; // per order position
    std::vector<int> labels;                   // by order position
    std::vector<int> firstChoices;

    bool solve(int pos) {
        if (pos == n) return true;
        if (pos == 0) {
            for (int c : firstChoices) {
                labels[0] = c;
                if (solve(1)) return true;
            }
            return false;
        }
        for (int c = 0; c <= k; ++c) {
            bool ok = true;
            for (const auto& cn : cons[pos])
                if (std::abs(c - labels[cn.pos]) < cn.gap) {
                    ok = false;
                    break;
                }
            if (ok) {
                labels[pos] = c;
                if (solve(pos + 1)) return true;
            }
        }
        return false;
    }
};

} // namespace

std::optional<Labeling> decide_exact(const Graph& g, const PqParams& params, int k,
                                     const Limits& lim) {
    validate_params(params);
    if (k < 0) throw ContractError("decide_exact: k must be >= 0");
    require_connected(g, "decide_exact");
    if (g.n > lim.exact_max_n)
        throw Refusal("decide_exact: n=" + std::to_string(g.n) + " exceeds cap " +
                      std::to_string(lim.exact_max_n));
    if (g.n == 0) return Labeling{};

    auto sq = square_graph(g);
    auto order = degeneracy_order(sq.square);
    std::vector<int> posOf(g.n);
    for (int i = 0; i < g.n; ++i) posOf[order[i]] = i;

    Backtracker bt;
    bt.n = g.n;
    bt.k = k;
    bt.cons.assign(g.n, {});
    for (std::size_t i = 0; i < sq.square.edges.size(); ++i) {
        auto [u, v] = sq.square.edges[i];
        int gap = (sq.gap[i] == GapClass::Dist1) ? params.p : params.q;
        int a = posOf[u], b = posOf[v];
        if (a > b) std::swap(a, b);
        bt.cons[b].push_back({a, gap});
    }
    // Reflection c -> k-c maps labelings onto labelings, so the first vertex
    // never needs a label above k/2; lexicographic minimality survives this.
    for (int c = 0; c <= k / 2; ++c) bt.firstChoices.push_back(c);
    bt.labels.assign(g.n, -1);

    if (!bt.solve(0)) return std::nullopt;
    Labeling f(g.n);
    for (int i = 0; i < g.n; ++i) f[order[i]] = bt.labels[i];
    return f;
}

std::pair<int, Labeling> lambda_exact(const Graph& g, const PqParams& params,
                                      const Limits& lim) {
    validate_params(params);
    require_connected(g, "lambda_exact");
    int start = (params.q == 1) ? lower_bound_lambda(g, params.p) : 0;
    int ceiling = lambda_search_ceiling(g, params);
    for (int k = start; k <= ceiling; ++k)
        if (auto f = decide_exact(g, params, k, lim)) return {k, *f};
    throw Error("lambda_exact: internal error, no feasible k up to ceiling " +
                std::to_string(ceiling));
}

} // namespace spanlab
