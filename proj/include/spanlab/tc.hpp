#pragma once

#include <optional>

#include "spanlab/labeling.hpp"
#include "spanlab/twincover.hpp"

namespace spanlab {

// Labels reserved for the cover when k is large: a block at each end of
// {0..k}, namely {0..(2p-1)s-p} and {k-(2p-1)s+p..k} for cover size s,
// clipped to [0,k] and deduped.  Empty when s = 0.
std::vector<int> good_label_range(int p, int coverSize, int k);

// All subsets of type indices whose cover neighborhoods are pairwise
// disjoint, sorted, starting with the empty system.  Refuses past
// lim.set_system_cap.
std::vector<std::vector<int>> enumerate_set_systems(const TwinCoverContext& ctx,
                                                    const Limits& lim = default_limits());

// Distributes the first sum(cliqueSizes) of the sorted labels over cliques
// given in descending size order, keeping labels inside one clique at least
// p apart provided sum >= p * max size.  Label indices form a grid with
// max-size rows, dealt to cliques column-major and read off row-major.
std::vector<std::vector<int>> schedule_clique_labels(const std::vector<int>& labels,
                                                     const std::vector<int>& cliqueSizes,
                                                     int p);

// Rewrites type typeIndex of a valid labeling onto the n_i smallest labels
// the type already uses, rescheduled clique by clique.  Needs p*omega <= n.
Labeling relabel_type(const Graph& g, const TwinCoverContext& ctx, const Labeling& f,
                      int typeIndex, int p);

// Which branch decide_tc resolved through, for logging and tests.
struct TcTelemetry {
    int caseUsed = 0;        // 1 = small k (delegated), 2 = large k
    int coverSize = 0;       // size of the augmented cover
    int numSystems = 0;      // set systems enumerated in case 2 (t+1)
    bool pigeonhole = false; // case 1 rejected by an oversized type
};

// L(p,1) feasibility for label bound k via the twin-cover route.  Small k is
// delegated to decide_exact / decide_dp after the pigeonhole check; large k
// (k >= 8*p*|augmented cover|) enumerates cover labelings over the good
// range, places good labels into set systems, solves the counting ILP and
// extends constructively.  Every witness is re-verified before returning.
std::optional<Labeling> decide_tc(const Graph& g, int p, int k,
                                  const Limits& lim = default_limits(),
                                  TcTelemetry* telemetry = nullptr);

// Smallest feasible k plus witness for L(p,1).
std::pair<int, Labeling> lambda_tc(const Graph& g, int p,
                                   const Limits& lim = default_limits());

} // namespace spanlab
