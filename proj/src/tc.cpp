#include "spanlab/tc.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "spanlab/exact.hpp"
#include "spanlab/dp.hpp"
#include "spanlab/ilp.hpp"

namespace spanlab {

std::vector<int> good_label_range(int p, int coverSize, int k) {
    if (p < 1 || coverSize < 0 || k < 0)
        throw ContractError("good_label_range: need p >= 1, coverSize >= 0, k >= 0");
    if (coverSize == 0) return {};
    int a = (2 * p - 1) * coverSize - p;
    std::vector<int> out;
    for (int l = 0; l <= std::min(a, k); ++l) out.push_back(l);
    for (int l = std::max(0, k - a); l <= k; ++l) out.push_back(l);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

std::uint64_t nbhd_mask(const std::vector<int>& cover, const std::vector<int>& nbhd) {
    std::uint64_t m = 0;
    for (int v : nbhd) {
        auto it = std::lower_bound(cover.begin(), cover.end(), v);
        m |= std::uint64_t{1} << (it - cover.begin());
    }
    return m;
}

} // namespace

std::vector<std::vector<int>> enumerate_set_systems(const TwinCoverContext& ctx,
                                                    const Limits& lim) {
    int s = static_cast<int>(ctx.types.size());
    if (ctx.cover.size() > 63)
        throw Refusal("enumerate_set_systems: cover too large for the mask");
    std::vector<std::uint64_t> masks(s);
    for (int i = 0; i < s; ++i) masks[i] = nbhd_mask(ctx.cover, ctx.types[i].nbhd);

    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // Preorder DFS emits systems in lexicographic order, empty system first.
    auto rec = [&](auto&& self, int next, std::uint64_t used) -> void {
        if (static_cast<int>(out.size()) >= lim.set_system_cap)
            throw Refusal("enumerate_set_systems: more than " +
                          std::to_string(lim.set_system_cap) + " systems");
        out.push_back(cur);
        for (int i = next; i < s; ++i) {
            if (masks[i] & used) continue;
            cur.push_back(i);
            self(self, i + 1, used | masks[i]);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::vector<std::vector<int>> schedule_clique_labels(const std::vector<int>& labels,
                                                     const std::vector<int>& cliqueSizes,
                                                     int p) {
    if (p < 1) throw ContractError("schedule_clique_labels: p must be >= 1");
    for (std::size_t i = 0; i < cliqueSizes.size(); ++i) {
        if (cliqueSizes[i] < 1)
            throw ContractError("schedule_clique_labels: clique sizes must be positive");
        if (i > 0 && cliqueSizes[i] > cliqueSizes[i - 1])
            throw ContractError("schedule_clique_labels: clique sizes must be descending");
    }
    for (std::size_t i = 1; i < labels.size(); ++i)
        if (labels[i] <= labels[i - 1])
            throw ContractError("schedule_clique_labels: labels must be strictly ascending");
    long long total = 0;
    for (int s : cliqueSizes) total += s;
    if (total > static_cast<long long>(labels.size()))
        throw ContractError("schedule_clique_labels: fewer labels than clique slots");
    int n = static_cast<int>(total);
    if (!cliqueSizes.empty() && static_cast<long long>(p) * cliqueSizes[0] > n)
        throw ContractError("schedule_clique_labels: need sum of sizes >= p * largest clique");

    // Grid over the first n labels with s = largest size rows: cell t
    // (dealt column-major) is row t % s, column t / s, and row r covers
    // ceil((n - r) / s) consecutive index positions, each at least p long
    // since n >= p * s.  A clique's occurrences fill consecutive cells and
    // land in distinct rows: same-column neighbors sit one full row apart,
    // a wrap pair of a smaller clique spans at least two rows, and cliques
    // of the largest size are dealt first so they start at row 0 and never
    // wrap.
    int s = cliqueSizes.empty() ? 1 : cliqueSizes[0];
    std::vector<int> offset(s + 1, 0);
    for (int r = 0; r < s; ++r) offset[r + 1] = offset[r] + (n - r + s - 1) / s;
    std::vector<std::vector<int>> out(cliqueSizes.size());
    int t = 0;
    for (std::size_t c = 0; c < cliqueSizes.size(); ++c) {
        for (int j = 0; j < cliqueSizes[c]; ++j, ++t)
            out[c].push_back(labels[offset[t % s] + t / s]);
        std::sort(out[c].begin(), out[c].end());
    }
    return out;
}

namespace {

// Cliques ordered by descending size (ties by first member) as the schedule
// expects; returns indexes into type.cliques.
std::vector<int> clique_order(const TypeInfo& type) {
    std::vector<int> idx(type.cliques.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (type.cliques[a].size() != type.cliques[b].size())
            return type.cliques[a].size() > type.cliques[b].size();
        return type.cliques[a] < type.cliques[b];
    });
    return idx;
}

// Writes `labels` onto the type's vertices, clique by clique in the given
// order, smallest label to smallest member.
void write_type_labels(Labeling& f, const TypeInfo& type, const std::vector<int>& order,
                       const std::vector<std::vector<int>>& perClique) {
    for (std::size_t c = 0; c < order.size(); ++c) {
        const auto& members = type.cliques[order[c]];
        for (std::size_t j = 0; j < members.size(); ++j) f[members[j]] = perClique[c][j];
    }
}

} // namespace

Labeling relabel_type(const Graph& g, const TwinCoverContext& ctx, const Labeling& f,
                      int typeIndex, int p) {
    if (typeIndex < 0 || typeIndex >= static_cast<int>(ctx.types.size()))
        throw ContractError("relabel_type: type index out of range");
    if (static_cast<int>(f.size()) != g.n)
        throw ContractError("relabel_type: labeling size mismatch");
    const TypeInfo& type = ctx.types[typeIndex];
    if (static_cast<long long>(p) * type.omega() > type.size())
        throw ContractError("relabel_type: type violates p * omega <= n");

    std::vector<int> used;
    for (int v : type.members) used.push_back(f[v]);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    if (static_cast<int>(used.size()) < type.size())
        throw ContractError("relabel_type: type uses fewer labels than members");
    used.resize(type.size());

    auto order = clique_order(type);
    std::vector<int> sizes;
    for (int c : order) sizes.push_back(static_cast<int>(type.cliques[c].size()));
    auto perClique = schedule_clique_labels(used, sizes, p);
    Labeling out = f;
    write_type_labels(out, type, order, perClique);
    return out;
}

namespace {

// Everything case 2 needs about one type, with cover vertices as indices
// into the sorted cover array.
struct TypeFacts {
    std::vector<int> nbhdIdx; // cover indices adjacent to the type
    std::vector<int> dist2Idx; // cover indices at distance exactly 2
    int n = 0;
};

struct Case2 {
    const Graph* g = nullptr;
    const TwinCoverContext* ctx = nullptr;
    const Limits* lim = nullptr;
    int p = 1, k = 0;
    std::vector<int> goodX, goodPlace;
    int middleLo = 0, middleHi = -1;
    std::vector<std::vector<int>> systems;
    std::vector<TypeFacts> facts;
    std::vector<std::vector<char>> coverAdj;   // cover x cover: adjacent in g
    std::vector<std::vector<char>> coverDist2; // cover x cover: distance exactly 2
    std::uint64_t partials = 0, placements = 0;

    std::vector<int> fx; // label per cover position, -1 while unset

    bool fx_consistent(int pos, int label) const {
        for (int o = 0; o < pos; ++o) {
            if (coverAdj[o][pos] && std::abs(fx[o] - label) < p) return false;
            if (coverDist2[o][pos] && fx[o] == label) return false;
        }
        return true;
    }

    bool label_fits_bucket(int label, int sysIdx) const {
        for (int j : systems[sysIdx]) {
            for (int ci : facts[j].nbhdIdx)
                if (std::abs(label - fx[ci]) < p) return false;
            for (int ci : facts[j].dist2Idx)
                if (fx[ci] == label) return false;
        }
        return true;
    }

    // Solves the counting ILP for the placement counts a[] and extends to a
    // full labeling on success.
    std::optional<Labeling> try_extend(const std::vector<std::vector<int>>& bucketGood) {
        int T = static_cast<int>(systems.size());
        int numTypes = static_cast<int>(ctx->types.size());
        LinearSystem sys;
        sys.lower.resize(T);
        sys.upper.resize(T);
        for (int i = 0; i < T; ++i) {
            sys.lower[i] = static_cast<long long>(bucketGood[i].size());
            long long up = k + 1;
            for (int j : systems[i]) up = std::min(up, static_cast<long long>(facts[j].n));
            sys.upper[i] = (i == 0) ? k + 1 : up;
        }
        LinearConstraint total;
        total.coeffs.assign(T, 1);
        total.rel = Rel::LessEq;
        total.rhs = k + 1;
        sys.cons.push_back(total);
        for (int j = 0; j < numTypes; ++j) {
            LinearConstraint eq;
            eq.coeffs.assign(T, 0);
            for (int i = 0; i < T; ++i)
                if (std::binary_search(systems[i].begin(), systems[i].end(), j))
                    eq.coeffs[i] = 1;
            eq.rel = Rel::Eq;
            eq.rhs = facts[j].n;
            sys.cons.push_back(eq);
        }
        auto x = ilp_feasible(sys, *lim);
        if (!x) return std::nullopt;

        // Middle labels are at least p away from every good label, so any of
        // them suits any bucket; hand them out in ascending order.
        std::vector<std::vector<int>> bucketLabels = bucketGood;
        int next = middleLo;
        for (int i = 1; i < T; ++i) {
            long long need = (*x)[i] - static_cast<long long>(bucketGood[i].size());
            while (need-- > 0) {
                if (next > middleHi)
                    throw Error("decide_tc: internal error, middle range exhausted");
                bucketLabels[i].push_back(next++);
            }
        }

        Labeling f(g->n, -1);
        for (std::size_t ci = 0; ci < ctx->cover.size(); ++ci) f[ctx->cover[ci]] = fx[ci];
        for (int j = 0; j < numTypes; ++j) {
            std::vector<int> labels;
            for (int i = 0; i < T; ++i)
                if (std::binary_search(systems[i].begin(), systems[i].end(), j))
                    labels.insert(labels.end(), bucketLabels[i].begin(), bucketLabels[i].end());
            std::sort(labels.begin(), labels.end());
            if (static_cast<int>(labels.size()) != facts[j].n)
                throw Error("decide_tc: internal error, type label count mismatch");
            const TypeInfo& type = ctx->types[j];
            auto order = clique_order(type);
            std::vector<int> sizes;
            for (int c : order) sizes.push_back(static_cast<int>(type.cliques[c].size()));
            auto perClique = schedule_clique_labels(labels, sizes, p);
            write_type_labels(f, type, order, perClique);
        }
        auto verdict = verify(*g, f, {p, 1});
        if (!verdict.valid || max_label(f) > k || *std::min_element(f.begin(), f.end()) < 0)
            throw Error("decide_tc: internal error, constructed labeling failed verification");
        return f;
    }

    // Places goodPlace[at..] into buckets depth-first, lexicographically.
    std::optional<Labeling> place(std::size_t at, std::vector<std::vector<int>>& bucketGood) {
        if (++placements > lim->tc_placement_cap)
            throw Refusal("decide_tc: placement cap exceeded");
        if (at == goodPlace.size()) return try_extend(bucketGood);
        int label = goodPlace[at];
        for (int i = 0; i < static_cast<int>(systems.size()); ++i) {
            if (i > 0 && !label_fits_bucket(label, i)) continue;
            bucketGood[i].push_back(label);
            if (auto f = place(at + 1, bucketGood)) return f;
            bucketGood[i].pop_back();
        }
        return std::nullopt;
    }

    std::optional<Labeling> assign_cover(std::size_t pos) {
        if (++partials > lim->tc_partial_cap)
            throw Refusal("decide_tc: cover labeling cap exceeded");
        if (pos == ctx->cover.size()) {
            std::vector<std::vector<int>> bucketGood(systems.size());
            return place(0, bucketGood);
        }
        for (int label : goodX) {
            if (!fx_consistent(static_cast<int>(pos), label)) continue;
            fx[pos] = label;
            if (auto f = assign_cover(pos + 1)) return f;
            fx[pos] = -1;
        }
        return std::nullopt;
    }
};

} // namespace

std::optional<Labeling> decide_tc(const Graph& g, int p, int k, const Limits& lim,
                                  TcTelemetry* telemetry) {
    if (p < 1) throw ContractError("decide_tc: p must be >= 1");
    if (k < 0) throw ContractError("decide_tc: k must be >= 0");
    require_connected(g, "decide_tc");

    auto cover = min_twin_cover(g, lim);
    auto ctx = type_partition(g, cover);
    auto actx = augment_cover(g, ctx, p);
    int s2 = static_cast<int>(actx.cover.size());
    if (telemetry) *telemetry = TcTelemetry{0, s2, 0, false};

    if (k < 8 * p * s2) {
        if (telemetry) telemetry->caseUsed = 1;
        // A type is pairwise within distance 2, so it needs distinct labels.
        for (const auto& t : ctx.types)
            if (t.size() > k + 1) {
                if (telemetry) telemetry->pigeonhole = true;
                return std::nullopt;
            }
        if (g.n <= lim.exact_max_n) return decide_exact(g, {p, 1}, k, lim);
        return decide_dp(g, {p, 1}, k, lim);
    }

    if (telemetry) telemetry->caseUsed = 2;
    Case2 c2;
    c2.g = &g;
    c2.ctx = &actx;
    c2.lim = &lim;
    c2.p = p;
    c2.k = k;
    c2.goodX = good_label_range(p, s2, k);
    int a = (2 * p - 1) * s2 - p;
    for (int l = 0; l <= std::min(a + p - 1, k); ++l) c2.goodPlace.push_back(l);
    for (int l = std::max(0, k - a - p + 1); l <= k; ++l) c2.goodPlace.push_back(l);
    std::sort(c2.goodPlace.begin(), c2.goodPlace.end());
    c2.goodPlace.erase(std::unique(c2.goodPlace.begin(), c2.goodPlace.end()),
                       c2.goodPlace.end());
    c2.middleLo = a + p;
    c2.middleHi = k - a - p;
    if (c2.middleLo < 0 || c2.middleLo > c2.middleHi ||
        static_cast<int>(c2.goodPlace.size()) + (c2.middleHi - c2.middleLo + 1) != k + 1)
        throw Error("decide_tc: internal error, label ranges do not partition {0..k}");
    c2.systems = enumerate_set_systems(actx, lim);
    if (telemetry) telemetry->numSystems = static_cast<int>(c2.systems.size());

    int cs = static_cast<int>(actx.cover.size());
    c2.coverAdj.assign(cs, std::vector<char>(cs, 0));
    c2.coverDist2.assign(cs, std::vector<char>(cs, 0));
    for (int i = 0; i < cs; ++i) {
        auto dist = bfs_distances(g, actx.cover[i]);
        for (int j = 0; j < cs; ++j) {
            if (dist[actx.cover[j]] == 1) c2.coverAdj[i][j] = 1;
            if (dist[actx.cover[j]] == 2) c2.coverDist2[i][j] = 1;
        }
    }
    c2.facts.resize(actx.types.size());
    for (std::size_t j = 0; j < actx.types.size(); ++j) {
        TypeFacts tf;
        tf.n = actx.types[j].size();
        std::vector<char> inNbhd(cs, 0);
        for (int v : actx.types[j].nbhd) {
            int ci = static_cast<int>(
                std::lower_bound(actx.cover.begin(), actx.cover.end(), v) - actx.cover.begin());
            tf.nbhdIdx.push_back(ci);
            inNbhd[ci] = 1;
        }
        std::vector<char> d2(cs, 0);
        for (int v : actx.types[j].nbhd)
            for (int w : g.adj[v]) {
                auto it = std::lower_bound(actx.cover.begin(), actx.cover.end(), w);
                if (it != actx.cover.end() && *it == w) {
                    int ci = static_cast<int>(it - actx.cover.begin());
                    if (!inNbhd[ci]) d2[ci] = 1;
                }
            }
        for (int ci = 0; ci < cs; ++ci)
            if (d2[ci]) tf.dist2Idx.push_back(ci);
        c2.facts[j] = std::move(tf);
    }
    c2.fx.assign(cs, -1);
    return c2.assign_cover(0);
}

std::pair<int, Labeling> lambda_tc(const Graph& g, int p, const Limits& lim) {
    if (p < 1) throw ContractError("lambda_tc: p must be >= 1");
    require_connected(g, "lambda_tc");
    int start = lower_bound_lambda(g, p);
    int ceiling = lambda_search_ceiling(g, {p, 1});
    for (int k = start; k <= ceiling; ++k)
        if (auto f = decide_tc(g, p, k, lim)) return {k, *f};
    throw Error("lambda_tc: internal error, no feasible k up to ceiling " +
                std::to_string(ceiling));
}

} // namespace spanlab
