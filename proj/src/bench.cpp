#include "spanlab/bench.hpp"

#include <chrono>
#include <sstream>
#include <vector>

#include "spanlab/dp.hpp"
#include "spanlab/exact.hpp"
#include "spanlab/tc.hpp"

namespace spanlab {

std::uint64_t Rng::next(std::uint64_t bound) {
    if (bound == 0) throw ContractError("Rng::next: zero bound");
    std::uint64_t limit = ~0ull - ~0ull % bound;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % bound;
}

Graph random_connected_graph(Rng& rng, int n, int extraPercent) {
    if (n < 1) throw ContractError("random_connected_graph: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i)
        edges.push_back({static_cast<int>(rng.next(i)), i});
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(extraPercent, 100)) edges.push_back({u, v});
    return new_graph(n, std::move(edges));
}

Graph random_graph(Rng& rng, int n, int densityPercent) {
    if (n < 0) throw ContractError("random_graph: n must be >= 0");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(densityPercent, 100)) edges.push_back({u, v});
    return new_graph(n, std::move(edges));
}

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::string fmt_ms(double ms) {
    std::ostringstream ss;
    ss.setf(std::ios::fixed);
    ss.precision(1);
    ss << ms;
    return ss.str();
}

BenchReport bench_agreement(const BenchOptions& opt, const Limits& lim) {
    const std::pair<int, int> grid[] = {{1, 1}, {2, 1}, {2, 2}};
    Rng rng(opt.seed);
    std::ostringstream table;
    table << "inst  n  m  p q  exact  dp  tc  agree  ms(exact/dp/tc)\n";
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    bool ok = true;
    for (int i = 0; i < opt.count; ++i) {
        int n = 2 + static_cast<int>(rng.next(std::max(1, opt.maxN - 1)));
        Graph g = random_connected_graph(rng, n);
        for (auto [p, q] : grid) {
            auto t0 = std::chrono::steady_clock::now();
            auto [le, fe] = lambda_exact(g, {p, q}, lim);
            double msExact = ms_since(t0);
            t0 = std::chrono::steady_clock::now();
            auto [ld, fd] = lambda_dp(g, {p, q}, lim);
            double msDp = ms_since(t0);
            bool agree = le == ld;
            int lt = -1;
            double msTc = 0;
            if (q == 1) {
                t0 = std::chrono::steady_clock::now();
                auto [ltc, ftc] = lambda_tc(g, p, lim);
                msTc = ms_since(t0);
                lt = ltc;
                agree = agree && le == lt;
            }
            ok = ok && agree;
            table << i << "  " << n << "  " << g.edge_count() << "  " << p << " " << q << "  "
                  << le << "  " << ld << "  " << (lt < 0 ? std::string("-") : std::to_string(lt))
                  << "  " << (agree ? "yes" : "NO") << "  " << fmt_ms(msExact) << "/"
                  << fmt_ms(msDp) << "/" << (q == 1 ? fmt_ms(msTc) : std::string("-")) << "\n";
            nlohmann::ordered_json row;
            row["instance"] = i;
            row["n"] = n;
            row["m"] = g.edge_count();
            row["p"] = p;
            row["q"] = q;
            row["lambda_exact"] = le;
            row["lambda_dp"] = ld;
            if (q == 1) row["lambda_tc"] = lt;
            row["agree"] = agree;
            rows.push_back(row);
        }
    }
    BenchReport rep;
    rep.table = table.str();
    rep.json = {{"suite", "agreement"}, {"seed", opt.seed},   {"maxN", opt.maxN},
                {"count", opt.count},   {"rows", rows},       {"ok", ok}};
    rep.ok = ok;
    return rep;
}

BenchReport bench_bounds(const BenchOptions& opt, const Limits& lim) {
    Rng rng(opt.seed);
    std::ostringstream table;
    table << "inst  n  m  p  maxdeg  lambda  low  high  within  ms\n";
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    bool ok = true;
    for (int i = 0; i < opt.count; ++i) {
        int n = 2 + static_cast<int>(rng.next(std::max(1, opt.maxN - 1)));
        Graph g = random_connected_graph(rng, n);
        int delta = max_degree(g);
        for (int p : {1, 2}) {
            auto t0 = std::chrono::steady_clock::now();
            auto [lambda, f] = lambda_exact(g, {p, 1}, lim);
            double ms = ms_since(t0);
            bool checked = delta >= 3;
            int low = delta + p - 1;
            int high = delta * delta + (p - 1) * delta - 2;
            bool within = !checked || (low <= lambda && lambda <= high);
            ok = ok && within;
            table << i << "  " << n << "  " << g.edge_count() << "  " << p << "  " << delta
                  << "  " << lambda << "  " << low << "  " << (checked ? std::to_string(high) : "-")
                  << "  " << (checked ? (within ? "yes" : "NO") : "skip") << "  " << fmt_ms(ms)
                  << "\n";
            nlohmann::ordered_json row;
            row["instance"] = i;
            row["n"] = n;
            row["m"] = g.edge_count();
            row["p"] = p;
            row["maxdeg"] = delta;
            row["lambda"] = lambda;
            row["checked"] = checked;
            row["within"] = within;
            rows.push_back(row);
        }
    }
    BenchReport rep;
    rep.table = table.str();
    rep.json = {{"suite", "bounds"}, {"seed", opt.seed}, {"maxN", opt.maxN},
                {"count", opt.count}, {"rows", rows},    {"ok", ok}};
    rep.ok = ok;
    return rep;
}

BenchReport bench_random(const BenchOptions& opt, const Limits& lim) {
    Rng rng(opt.seed);
    std::ostringstream table;
    table << "inst  n  m  lambda  valid  ms\n";
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    bool ok = true;
    for (int i = 0; i < opt.count; ++i) {
        int n = 2 + static_cast<int>(rng.next(std::max(1, opt.maxN - 1)));
        Graph g = random_connected_graph(rng, n);
        auto t0 = std::chrono::steady_clock::now();
        auto [lambda, f] = lambda_dp(g, {2, 1}, lim);
        double ms = ms_since(t0);
        bool valid = verify(g, f, {2, 1}).valid && max_label(f) <= lambda;
        ok = ok && valid;
        table << i << "  " << n << "  " << g.edge_count() << "  " << lambda << "  "
              << (valid ? "yes" : "NO") << "  " << fmt_ms(ms) << "\n";
        nlohmann::ordered_json row;
        row["instance"] = i;
        row["n"] = n;
        row["m"] = g.edge_count();
        row["lambda"] = lambda;
        row["valid"] = valid;
        rows.push_back(row);
    }
    BenchReport rep;
    rep.table = table.str();
    rep.json = {{"suite", "random"}, {"seed", opt.seed}, {"maxN", opt.maxN},
                {"count", opt.count}, {"rows", rows},    {"ok", ok}};
    rep.ok = ok;
    return rep;
}

} // namespace

BenchReport run_bench(const BenchOptions& opt, const Limits& lim) {
    if (opt.maxN < 2) throw ContractError("run_bench: maxN must be >= 2");
    if (opt.count < 1) throw ContractError("run_bench: count must be >= 1");
    if (opt.suite == "agreement") return bench_agreement(opt, lim);
    if (opt.suite == "bounds") return bench_bounds(opt, lim);
    if (opt.suite == "random") return bench_random(opt, lim);
    throw ContractError("run_bench: unknown suite '" + opt.suite + "'");
}

} // namespace spanlab
