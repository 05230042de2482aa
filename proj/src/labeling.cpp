#include "spanlab/labeling.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace spanlab {

void validate_params(const PqParams& params) {
    if (params.p < 1 || params.q < 1)
        throw ContractError("params: need p >= 1 and q >= 1, got p=" +
                            std::to_string(params.p) + " q=" + std::to_string(params.q));
}

static void require_total(const Graph& g, const Labeling& f, const char* who) {
    if (static_cast<int>(f.size()) != g.n)
        throw ContractError(std::string(who) + ": labeling has " + std::to_string(f.size()) +
                            " entries for " + std::to_string(g.n) + " vertices");
    for (int v = 0; v < g.n; ++v)
        if (f[v] < 0)
            throw ContractError(std::string(who) + ": negative label at vertex " +
                                std::to_string(v));
}

Verdict verify(const Graph& g, const Labeling& f, const PqParams& params) {
    validate_params(params);
    require_total(g, f, "verify");
    Verdict out;
    for (auto [u, v] : g.edges) {
        int gap = std::abs(f[u] - f[v]);
        if (gap < params.p) {
            out.valid = false;
            out.violations.push_back({u, v, GapClass::Dist1, gap});
        }
    }
    for (auto [u, v] : distance2_pairs(g)) {
        int gap = std::abs(f[u] - f[v]);
        if (gap < params.q) {
            out.valid = false;
            out.violations.push_back({u, v, GapClass::Dist2, gap});
        }
    }
    return out;
}

int span_of(const Labeling& f) {
    if (f.empty()) return 0;
    auto [lo, hi] = std::minmax_element(f.begin(), f.end());
    return *hi - *lo + 1;
}

int max_label(const Labeling& f) {
    if (f.empty()) return -1;
    return *std::max_element(f.begin(), f.end());
}

Labeling scale_labeling(const Labeling& f, int c) {
    if (c < 1) throw ContractError("scale_labeling: factor must be >= 1");
    Labeling out(f);
    for (int& x : out) x *= c;
    return out;
}

int lower_bound_lambda(const Graph& g, int p) {
    if (p < 1) throw ContractError("lower_bound_lambda: p must be >= 1");
    if (g.edges.empty()) return 0;
    return max_degree(g) + p - 1;
}

int upper_bound_lambda(const Graph& g, const PqParams& params) {
    validate_params(params);
    int d = max_degree(g);
    int general = std::max(params.p, params.q) * d * d;
    if (params.q != 1) return general;
    int degreeSq = d * d + (params.p - 1) * d - 2;
    if (d >= 3) return degreeSq;
    // Small-degree graphs: the degree-squared formula can go negative or
    // undercut the trivial lower bound, so clamp.
    return std::max(std::min(degreeSq, general), lower_bound_lambda(g, params.p));
}

int lambda_search_ceiling(const Graph& g, const PqParams& params) {
    validate_params(params);
    int d = max_degree(g);
    return std::max(std::max(params.p, params.q) * d * d, lower_bound_lambda(g, params.p));
}

} // namespace spanlab
