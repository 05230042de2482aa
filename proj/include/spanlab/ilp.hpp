#pragma once

#include <optional>
#include <vector>

#include "spanlab/errors.hpp"
#include "spanlab/limits.hpp"

namespace spanlab {

enum class Rel { LessEq, Eq, GreaterEq };

struct LinearConstraint {
    std::vector<long long> coeffs; // one per variable
    Rel rel = Rel::LessEq;
    long long rhs = 0;
};

// Bounded-variable integer system.  Every variable needs finite bounds.
struct LinearSystem {
    std::vector<long long> lower;
    std::vector<long long> upper;
    std::vector<LinearConstraint> cons;

    int num_vars() const { return static_cast<int>(lower.size()); }
};

// Depth-first feasibility search with interval propagation to fixpoint after
// each decision.  Branches on the variable with the smallest live domain
// (ties by index), values ascending, so the witness is deterministic.
// Throws ContractError on malformed systems and Refusal past the node cap.
std::optional<std::vector<long long>> ilp_feasible(const LinearSystem& sys,
                                                   const Limits& lim = default_limits());

} // namespace spanlab
