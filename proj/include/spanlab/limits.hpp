#pragma once

#include <cstdint>

namespace spanlab {

// Caps and budgets for the exponential-in-the-worst-case pieces.  Exceeding
// any of these raises Refusal.  The defaults are sized for desk-scale inputs.
struct Limits {
    // decide_exact: max vertex count for the backtracking oracle.
    int exact_max_n = 16;
    // max_clique_size: max vertex count for the exact clique search.
    int clique_max_n = 64;
    // exact_td: max vertex count for exact treewidth.
    int exact_td_max_n = 12;
    // decide_dp: total table entries stored across all nice-tree nodes.
    // Overridable at the CLI via SPANLAB_STATE_BUDGET.
    std::uint64_t dp_state_budget = 10'000'000;
    // min_twin_cover: branching depth budget.
    int twin_cover_depth = 20;
    // enumerate_set_systems: max number of systems.
    int set_system_cap = 4096;
    // decide_tc case 2: max cover labelings tried, and max
    // (labeling, placement) pairs examined overall.
    std::uint64_t tc_partial_cap = 1'000'000;
    std::uint64_t tc_placement_cap = 4'000'000;
    // ilp_feasible: max search nodes.
    std::uint64_t ilp_node_cap = 20'000'000;
};

inline Limits default_limits() { return Limits{}; }

} // namespace spanlab
