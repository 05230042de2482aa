#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "spanlab/graph.hpp"
#include "spanlab/limits.hpp"

namespace spanlab {

// Deterministic splitmix64 stream with rejection-sampled bounded draws, so
// seeded runs produce identical instances on every platform.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound).
    std::uint64_t next(std::uint64_t bound);

    // True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return next(den) < num; }
};

// Random attachment tree plus extra edges, so the result is connected.
Graph random_connected_graph(Rng& rng, int n, int extraPercent = 30);

// Plain G(n, densityPercent/100).
Graph random_graph(Rng& rng, int n, int densityPercent = 40);

struct BenchOptions {
    std::string suite = "agreement"; // agreement | bounds | random
    int maxN = 8;
    int count = 25;
    std::uint64_t seed = 1;
};

// Timings appear only in the text table; the JSON report is a pure function
// of the options so seeded runs stay byte-identical.
struct BenchReport {
    std::string table;
    nlohmann::ordered_json json;
    bool ok = false;
};

BenchReport run_bench(const BenchOptions& opt, const Limits& lim = default_limits());

} // namespace spanlab
