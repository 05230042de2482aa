#include "spanlab/dp.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>

namespace spanlab {

namespace {

// A state is the bag's labeling packed base (k+1), digit order = sorted bag.
// back(.a,.b) point into the child tables for reconstruction.
struct Back {
    std::uint32_t a = 0, b = 0;
};

struct Table {
    std::vector<std::uint64_t> keys; // sorted
    std::vector<Back> back;
};

struct DpRun {
    const NiceTree* nt = nullptr;
    const SquareGraph* sq = nullptr;
    int p = 1, q = 1, k = 0;
    std::uint64_t base = 1, created = 0, budget = 0;
    int curWidth = 0;
    std::vector<Table> tables;
    std::vector<char> done;
    std::vector<int> parent;
    // An IntroduceVertex and the IntroduceEdge run above it execute as one
    // streamed pass, so only surviving states are ever stored.  The chain's
    // table lives at its top node; fusedV/fusedChild carry what
    // reconstruction needs to skip the interior.
    std::vector<int> fusedV, fusedChild;

    // The budget caps stored states, not time: every table entry is charged
    // as it is pushed, transient candidates are free.
    void charge(std::uint64_t add) {
        created += add;
        if (created > budget)
            throw Refusal("decide_dp: state budget " + std::to_string(budget) +
                          " exceeded (bag width " + std::to_string(curWidth) +
                          ", k=" + std::to_string(k) +
                          "; set SPANLAB_STATE_BUDGET to raise it)");
    }

    static int bag_pos(const std::vector<int>& bag, int v) {
        return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
    }

    // Key-space injectivity needs base^|bag| to fit in 64 bits.
    void check_key_space(int maxBag) const {
        std::uint64_t cap = 1;
        for (int i = 0; i < maxBag; ++i) {
            if (cap > (std::uint64_t{1} << 62) / base)
                throw Refusal("decide_dp: bag size " + std::to_string(maxBag) +
                              " with k=" + std::to_string(k) + " overflows the state key");
            cap *= base;
        }
    }

    std::uint64_t pow_base(int e) const {
        std::uint64_t r = 1;
        while (e-- > 0) r *= base;
        return r;
    }

    void process(int id) {
        if (done[id]) return;
        done[id] = 1;
        const NiceNode& node = nt->nodes[id];
        Table& out = tables[id];
        curWidth = static_cast<int>(node.bag.size()) - 1;
        switch (node.kind) {
        case NodeKind::Leaf:
            out.keys = {0};
            out.back = {Back{}};
            charge(1);
            break;
        case NodeKind::IntroduceVertex: {
            // Walk the IntroduceEdge run above; its filters apply to this
            // node's extensions in one pass.
            int top = id;
            std::vector<int> chainEdges;
            while (parent[top] >= 0 && nt->nodes[parent[top]].kind == NodeKind::IntroduceEdge) {
                top = parent[top];
                done[top] = 1;
                chainEdges.push_back(top);
            }
            const Table& ch = tables[node.children[0]];
            int pos = bag_pos(node.bag, node.v);
            std::uint64_t lowMod = pow_base(pos);
            struct EdgeCheck {
                std::uint64_t mu, mv;
                int gap;
            };
            std::vector<EdgeCheck> checks;
            for (int e : chainEdges) {
                const NiceNode& en = nt->nodes[e];
                checks.push_back({pow_base(bag_pos(en.bag, en.u)),
                                  pow_base(bag_pos(en.bag, en.v)),
                                  (sq->gap[en.edgeIndex] == GapClass::Dist1) ? p : q});
            }
            Table& dst = tables[top];
            std::vector<std::pair<std::uint64_t, Back>> acc;
            for (std::uint32_t i = 0; i < ch.keys.size(); ++i) {
                std::uint64_t key = ch.keys[i];
                std::uint64_t low = key % lowMod, high = key / lowMod;
                for (int c = 0; c <= k; ++c) {
                    std::uint64_t cand = low + (high * base + c) * lowMod;
                    bool ok = true;
                    for (const auto& ec : checks) {
                        int cu = static_cast<int>(cand / ec.mu % base);
                        int cv = static_cast<int>(cand / ec.mv % base);
                        if (std::abs(cu - cv) < ec.gap) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) continue;
                    charge(1);
                    acc.emplace_back(cand, Back{i, 0});
                }
            }
            std::sort(acc.begin(), acc.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            dst.keys.reserve(acc.size());
            dst.back.reserve(acc.size());
            for (auto& [key, bk] : acc) {
                dst.keys.push_back(key);
                dst.back.push_back(bk);
            }
            fusedV[top] = node.v;
            fusedChild[top] = node.children[0];
            break;
        }
        case NodeKind::IntroduceEdge: {
            // Reached only when the node sits directly on a Join or Forget,
            // which the builder never emits; filter alone for safety.
            const Table& ch = tables[node.children[0]];
            int pu = bag_pos(node.bag, node.u), pv = bag_pos(node.bag, node.v);
            std::uint64_t mu = pow_base(pu), mv = pow_base(pv);
            int gap = (sq->gap[node.edgeIndex] == GapClass::Dist1) ? p : q;
            for (std::uint32_t i = 0; i < ch.keys.size(); ++i) {
                int cu = static_cast<int>(ch.keys[i] / mu % base);
                int cv = static_cast<int>(ch.keys[i] / mv % base);
                if (std::abs(cu - cv) >= gap) {
                    charge(1);
                    out.keys.push_back(ch.keys[i]);
                    out.back.push_back(Back{i, 0});
                }
            }
            break;
        }
        case NodeKind::Forget: {
            const Table& ch = tables[node.children[0]];
            const auto& childBag = nt->nodes[node.children[0]].bag;
            int pos = bag_pos(childBag, node.v);
            std::uint64_t lowMod = pow_base(pos);
            std::vector<std::pair<std::uint64_t, std::uint32_t>> acc;
            acc.reserve(ch.keys.size());
            for (std::uint32_t i = 0; i < ch.keys.size(); ++i) {
                std::uint64_t key = ch.keys[i];
                std::uint64_t low = key % lowMod, high = key / lowMod / base;
                acc.emplace_back(low + high * lowMod, i);
            }
            // Child keys ascend with i, so stable sort by the projected key
            // keeps the smallest (lexicographically least) pre-image first.
            std::stable_sort(acc.begin(), acc.end(),
                             [](const auto& x, const auto& y) { return x.first < y.first; });
            for (auto& [key, i] : acc)
                if (out.keys.empty() || out.keys.back() != key) {
                    charge(1);
                    out.keys.push_back(key);
                    out.back.push_back(Back{i, 0});
                }
            break;
        }
        case NodeKind::Join: {
            const Table& a = tables[node.children[0]];
            const Table& b = tables[node.children[1]];
            std::uint32_t i = 0, j = 0;
            while (i < a.keys.size() && j < b.keys.size()) {
                if (a.keys[i] < b.keys[j])
                    ++i;
                else if (a.keys[i] > b.keys[j])
                    ++j;
                else {
                    charge(1);
                    out.keys.push_back(a.keys[i]);
                    out.back.push_back(Back{i, j});
                    ++i;
                    ++j;
                }
            }
            break;
        }
        }
        // Child tables feeding only this node could be freed here; they are
        // kept because reconstruction walks them again.
    }

    void reconstruct(int id, std::uint32_t state, Labeling& f) const {
        const NiceNode& node = nt->nodes[id];
        if (fusedV[id] >= 0) {
            int v = fusedV[id];
            int pos = bag_pos(node.bag, v);
            int c = static_cast<int>(tables[id].keys[state] / pow_base(pos) % base);
            if (f[v] >= 0 && f[v] != c)
                throw Error("decide_dp: internal error, inconsistent reconstruction");
            f[v] = c;
            reconstruct(fusedChild[id], tables[id].back[state].a, f);
            return;
        }
        switch (node.kind) {
        case NodeKind::Leaf:
            break;
        case NodeKind::IntroduceVertex:
        case NodeKind::IntroduceEdge:
        case NodeKind::Forget:
            reconstruct(node.children[0], tables[id].back[state].a, f);
            break;
        case NodeKind::Join:
            reconstruct(node.children[0], tables[id].back[state].a, f);
            reconstruct(node.children[1], tables[id].back[state].b, f);
            break;
        }
    }
};

// Post-order over the nice tree without recursion; chains can be long.
std::vector<int> post_order(const NiceTree& nt) {
    std::vector<int> order, stack{nt.root()};
    std::vector<char> expanded(nt.nodes.size(), 0);
    while (!stack.empty()) {
        int id = stack.back();
        if (expanded[id]) {
            stack.pop_back();
            order.push_back(id);
            continue;
        }
        expanded[id] = 1;
        for (int c : nt.nodes[id].children) stack.push_back(c);
    }
    return order;
}

} // namespace

std::optional<Labeling> decide_dp(const Graph& g, const PqParams& params, int k,
                                  const Limits& lim, const TreeDecomposition* td) {
    validate_params(params);
    if (k < 0) throw ContractError("decide_dp: k must be >= 0");
    require_connected(g, "decide_dp");
    TreeDecomposition own;
    if (!td) {
        own = heuristic_td(g);
        td = &own;
    }
    auto sq = square_graph(g);
    auto td2 = square_td(g, *td);
    auto nice = make_nice(sq.square, td2);

    DpRun run;
    run.nt = &nice;
    run.sq = &sq;
    run.p = params.p;
    run.q = params.q;
    run.k = k;
    run.base = static_cast<std::uint64_t>(k) + 1;
    run.budget = lim.dp_state_budget;
    run.check_key_space(nice.width() + 1);
    run.tables.assign(nice.nodes.size(), {});
    run.done.assign(nice.nodes.size(), 0);
    run.fusedV.assign(nice.nodes.size(), -1);
    run.fusedChild.assign(nice.nodes.size(), -1);
    run.parent.assign(nice.nodes.size(), -1);
    for (std::size_t id = 0; id < nice.nodes.size(); ++id)
        for (int c : nice.nodes[id].children) run.parent[c] = static_cast<int>(id);
    for (int id : post_order(nice)) run.process(id);

    const Table& root = run.tables[nice.root()];
    if (root.keys.empty()) return std::nullopt;
    Labeling f(g.n, -1);
    run.reconstruct(nice.root(), 0, f);
    for (int v = 0; v < g.n; ++v)
        if (f[v] < 0) throw Error("decide_dp: internal error, vertex never introduced");
    return f;
}

std::pair<int, Labeling> lambda_dp(const Graph& g, const PqParams& params, const Limits& lim,
                                   const TreeDecomposition* td) {
    validate_params(params);
    require_connected(g, "lambda_dp");
    TreeDecomposition own;
    if (!td) {
        own = heuristic_td(g);
        td = &own;
    }
    int start = (params.q == 1) ? lower_bound_lambda(g, params.p) : 0;
    int ceiling = lambda_search_ceiling(g, params);
    for (int k = start; k <= ceiling; ++k)
        if (auto f = decide_dp(g, params, k, lim, td)) return {k, *f};
    throw Error("lambda_dp: internal error, no feasible k up to ceiling " +
                std::to_string(ceiling));
}

} // namespace spanlab
