#include "spanlab/l11.hpp"

#include "spanlab/dp.hpp"
#include "spanlab/exact.hpp"
#include "spanlab/twincover.hpp"

namespace spanlab {

Graph delete_twin_edges(const Graph& g, const std::vector<int>& x) {
    if (!is_twin_cover(g, x))
        throw ContractError("delete_twin_edges: x is not a twin cover");
    std::vector<char> inX(g.n, 0);
    for (int v : x) inX[v] = 1;
    std::vector<std::pair<int, int>> drop;
    for (auto [u, v] : g.edges)
        if (!inX[u] && !inX[v]) drop.push_back({u, v});
    return remove_edges(g, drop);
}

std::pair<int, Labeling> lambda_l11(const Graph& g, const Limits& lim) {
    require_connected(g, "lambda_l11");
    auto cover = min_twin_cover(g, lim);
    if (cover.empty() && g.n > 0) cover.push_back(0);
    Graph reduced = delete_twin_edges(g, cover);
    auto [lambda, f] = g.n <= lim.exact_max_n ? lambda_exact(reduced, {1, 1}, lim)
                                              : lambda_dp(reduced, {1, 1}, lim);
    auto verdict = verify(g, f, {1, 1});
    if (!verdict.valid)
        throw Error("lambda_l11: internal error, reduced optimum invalid on the original graph");
    return {lambda, f};
}

std::pair<int, Labeling> approx_lp1(const Graph& g, int p, const Limits& lim) {
    if (p < 1) throw ContractError("approx_lp1: p must be >= 1");
    auto [lambda, f] = lambda_l11(g, lim);
    Labeling scaled = scale_labeling(f, p);
    if (!verify(g, scaled, {p, 1}).valid || !verify(g, scaled, {p, p}).valid)
        throw Error("approx_lp1: internal error, scaled labeling invalid");
    return {p * lambda, scaled};
}

} // namespace spanlab
