// spanlab: exact L(p,q)-labeling via brute force, square-graph tree
// decomposition DP, the twin-cover route, and the L(1,1) reduction.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "spanlab/bench.hpp"
#include "spanlab/dp.hpp"
#include "spanlab/exact.hpp"
#include "spanlab/io.hpp"
#include "spanlab/l11.hpp"
#include "spanlab/mso.hpp"
#include "spanlab/tc.hpp"
#include "spanlab/treedecomp.hpp"

namespace {

using namespace spanlab;

constexpr int kExitSat = 0;
constexpr int kExitUnsat = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRefused = 3;

Limits limits_from_env() {
    Limits lim = default_limits();
    const char* raw = std::getenv("SPANLAB_STATE_BUDGET");
    if (raw && *raw) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(raw, &end, 10);
        if (end == raw || *end != '\0' || v == 0)
            throw ContractError("SPANLAB_STATE_BUDGET must be a positive integer");
        lim.dp_state_budget = v;
    }
    return lim;
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ContractError("cannot open graph file '" + path + "'");
    return parse_gr(in);
}

struct SolveConfig {
    std::string algo;
    PqParams params;
    std::optional<int> k;
    const TreeDecomposition* td = nullptr;
    const Limits* lim = nullptr;
};

// One connected graph through the selected track.  Returns the labeling (or
// none for UNSAT in decide mode) and the reported lambda.
std::pair<std::optional<Labeling>, int> solve_one(const Graph& g, const SolveConfig& cfg) {
    const Limits& lim = *cfg.lim;
    if (cfg.k) {
        int k = *cfg.k;
        std::optional<Labeling> f;
        if (cfg.algo == "exact") f = decide_exact(g, cfg.params, k, lim);
        else if (cfg.algo == "dp") f = decide_dp(g, cfg.params, k, lim, cfg.td);
        else f = decide_tc(g, cfg.params.p, k, lim);
        int lambda = f ? max_label(*f) : -1;
        return {std::move(f), lambda};
    }
    if (cfg.algo == "exact") {
        auto [l, f] = lambda_exact(g, cfg.params, lim);
        return {std::move(f), l};
    }
    if (cfg.algo == "dp") {
        auto [l, f] = lambda_dp(g, cfg.params, lim, cfg.td);
        return {std::move(f), l};
    }
    if (cfg.algo == "tc") {
        auto [l, f] = lambda_tc(g, cfg.params.p, lim);
        return {std::move(f), l};
    }
    if (cfg.algo == "l11") {
        auto [l, f] = lambda_l11(g, lim);
        return {std::move(f), l};
    }
    auto [l, f] = approx_lp1(g, cfg.params.p, lim);
    return {std::move(f), l};
}

int cmd_solve(const std::string& graphPath, int p, int q, std::optional<int> k,
              const std::string& algo, const std::string& tdPath, const std::string& jsonPath,
              bool perComponent) {
    Limits lim = limits_from_env();
    PqParams params{p, q};
    validate_params(params);
    if (algo == "tc" && q != 1)
        throw ContractError("the tc track handles q = 1 only");
    if (algo == "l11" && (p != 1 || q != 1))
        throw ContractError("the l11 track handles p = q = 1 only");
    if (algo == "approx" && q != 1)
        throw ContractError("the approx track handles q = 1 only");
    if (k && (algo == "l11" || algo == "approx"))
        throw ContractError("--k is supported by the exact, dp and tc tracks only");
    if (!tdPath.empty() && algo != "dp")
        throw ContractError("--td is only meaningful for the dp track");
    if (!tdPath.empty() && perComponent)
        throw ContractError("--td cannot be combined with --per-component");
    if (k && *k < 0) throw ContractError("--k must be >= 0");

    Graph g = load_graph(graphPath);

    TreeDecomposition td;
    SolveConfig cfg{algo, params, k, nullptr, &lim};
    if (!tdPath.empty()) {
        std::ifstream in(tdPath);
        if (!in) throw ContractError("cannot open decomposition file '" + tdPath + "'");
        int tdN = 0;
        td = parse_td(in, &tdN);
        if (tdN != g.n)
            throw ContractError("decomposition is for " + std::to_string(tdN) +
                                " vertices, graph has " + std::to_string(g.n));
        auto verdict = validate_td(g, td);
        if (!verdict.ok) throw ContractError("invalid decomposition: " + verdict.message);
        cfg.td = &td;
    }

    std::optional<Labeling> f;
    int lambda = -1;
    if (perComponent && !is_connected(g)) {
        Labeling assembled(g.n, -1);
        bool sat = true;
        for (const auto& comp : components(g)) {
            auto [cf, cl] = solve_one(induced_subgraph(g, comp), cfg);
            if (!cf) {
                sat = false;
                break;
            }
            for (std::size_t i = 0; i < comp.size(); ++i) assembled[comp[i]] = (*cf)[i];
            lambda = std::max(lambda, cl);
        }
        if (sat) f = std::move(assembled);
    } else {
        auto [sf, sl] = solve_one(g, cfg);
        f = std::move(sf);
        lambda = sl;
    }

    if (!f) {
        std::cout << "UNSAT\n";
        return kExitUnsat;
    }
    auto verdict = verify(g, *f, params);
    if (!verdict.valid) throw Error("internal error: emitted labeling failed verification");
    if (k) std::cout << "SAT\n";
    else if (algo == "approx") std::cout << "value = " << lambda << "\n";
    else std::cout << "lambda = " << lambda << "\n";
    std::cout << "labels =";
    for (int v = 0; v < g.n; ++v) std::cout << " " << (*f)[v];
    std::cout << "\n";
    if (!jsonPath.empty()) {
        std::ofstream out(jsonPath);
        if (!out) throw ContractError("cannot write '" + jsonPath + "'");
        out << labeling_json(g, *f, params, lambda, algo).dump(2) << "\n";
    }
    return kExitSat;
}

int cmd_verify(const std::string& graphPath, const std::string& labelingPath, int p, int q) {
    PqParams params{p, q};
    validate_params(params);
    Graph g = load_graph(graphPath);
    std::ifstream in(labelingPath);
    if (!in) throw ContractError("cannot open labeling file '" + labelingPath + "'");
    nlohmann::ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ContractError(std::string("labeling json: ") + e.what());
    }
    Labeling f = labeling_from_json(j, g.n);
    auto verdict = verify(g, f, params);
    if (verdict.valid) {
        std::cout << "valid\n";
        return kExitSat;
    }
    for (const auto& viol : verdict.violations)
        std::cout << "violation: vertices " << viol.u + 1 << " and " << viol.v + 1
                  << " at distance " << (viol.cls == GapClass::Dist1 ? 1 : 2) << " need gap >= "
                  << (viol.cls == GapClass::Dist1 ? p : q) << ", have " << viol.gap << "\n";
    return kExitUnsat;
}

int cmd_bench(const std::string& suite, int maxN, int count, std::uint64_t seed,
              const std::string& jsonPath) {
    Limits lim = limits_from_env();
    BenchOptions opt;
    opt.suite = suite;
    opt.maxN = maxN;
    opt.count = count;
    opt.seed = seed;
    BenchReport rep = run_bench(opt, lim);
    std::cout << rep.table;
    if (!jsonPath.empty()) {
        std::ofstream out(jsonPath);
        if (!out) throw ContractError("cannot write '" + jsonPath + "'");
        out << rep.json.dump(2) << "\n";
    } else {
        std::cout << rep.json.dump(2) << "\n";
    }
    if (!rep.ok) {
        std::cout << "suite failed\n";
        return kExitUnsat;
    }
    return kExitSat;
}

int cmd_mso(int k, int p, int q, const std::string& outPath) {
    PqParams params{p, q};
    validate_params(params);
    std::string text = emit_phi(k, params);
    std::ofstream out(outPath);
    if (!out) throw ContractError("cannot write '" + outPath + "'");
    out << text << "\n";
    return kExitSat;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact L(p,q)-labeling toolkit"};
    app.require_subcommand(1);

    std::string graphPath, tdPath, jsonPath, labelingPath, outPath;
    std::string algo, suite = "agreement";
    int p = 0, q = 0, k = -1, maxN = 8, count = 25, msoK = 0;
    std::uint64_t seed = 1;
    bool perComponent = false;

    auto* solve = app.add_subcommand("solve", "compute lambda or decide a given k");
    solve->add_option("--graph", graphPath, "input .gr file")->required();
    solve->add_option("--p", p, "distance-1 gap")->required();
    solve->add_option("--q", q, "distance-2 gap")->required();
    solve->add_option("--k", k, "decide feasibility for this span instead of minimizing");
    solve->add_option("--algo", algo, "exact | dp | tc | l11 | approx")
        ->required()
        ->check(CLI::IsMember({"exact", "dp", "tc", "l11", "approx"}));
    solve->add_option("--td", tdPath, "tree decomposition of the input graph (dp only)");
    solve->add_option("--json", jsonPath, "write the labeling as JSON here");
    solve->add_flag("--per-component", perComponent,
                    "solve disconnected inputs component by component");

    auto* verify = app.add_subcommand("verify", "check a labeling file against a graph");
    verify->add_option("--graph", graphPath, "input .gr file")->required();
    verify->add_option("--labeling", labelingPath, "labeling JSON file")->required();
    verify->add_option("--p", p, "distance-1 gap")->required();
    verify->add_option("--q", q, "distance-2 gap")->required();

    auto* bench = app.add_subcommand("bench", "run a cross-check suite");
    bench->add_option("--suite", suite, "agreement | bounds | random")
        ->check(CLI::IsMember({"agreement", "bounds", "random"}));
    bench->add_option("--n", maxN, "largest instance size");
    bench->add_option("--count", count, "number of instances");
    bench->add_option("--seed", seed, "rng seed");
    bench->add_option("--json", jsonPath, "write the JSON report here");

    auto* mso = app.add_subcommand("mso", "emit the labeling formula phi_k");
    mso->add_option("--k", msoK, "span bound")->required();
    mso->add_option("--p", p, "distance-1 gap")->required();
    mso->add_option("--q", q, "distance-2 gap")->required();
    mso->add_option("--out", outPath, "output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (solve->parsed()) {
            std::optional<int> kOpt;
            if (solve->count("--k")) kOpt = k;
            return cmd_solve(graphPath, p, q, kOpt, algo, tdPath, jsonPath, perComponent);
        }
        if (verify->parsed()) return cmd_verify(graphPath, labelingPath, p, q);
        if (bench->parsed()) return cmd_bench(suite, maxN, count, seed, jsonPath);
        return cmd_mso(msoK, p, q, outPath);
    } catch (const Refusal& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitRefused;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
