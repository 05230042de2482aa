#include "spanlab/ilp.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace spanlab {

namespace {

// Keeps every partial sum well inside long long range.
constexpr long long kMagnitudeCap = 1'000'000;

// All constraints normalized to sum(c_i x_i) <= b.
struct Row {
    std::vector<std::pair<int, long long>> terms; // (var, coeff), coeff != 0
    long long rhs = 0;
};

struct Search {
    int n = 0;
    std::vector<Row> rows;
    std::uint64_t nodes = 0, nodeCap = 0;

    // Tightens [lo,hi] to a propagation fixpoint.  Returns false on an empty
    // domain, i.e. infeasible under the current partial assignment.
    bool propagate(std::vector<long long>& lo, std::vector<long long>& hi) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Row& r : rows) {
                long long minSum = 0;
                for (auto [j, c] : r.terms) minSum += c > 0 ? c * lo[j] : c * hi[j];
                if (minSum > r.rhs) return false;
                for (auto [j, c] : r.terms) {
                    long long own = c > 0 ? c * lo[j] : c * hi[j];
                    long long slack = r.rhs - (minSum - own);
                    // c*x_j <= slack
                    if (c > 0) {
                        long long bound = slack >= 0 ? slack / c : -((-slack + c - 1) / c);
                        if (bound < hi[j]) {
                            hi[j] = bound;
                            changed = true;
                        }
                    } else {
                        long long cc = -c; // cc*x_j >= -slack
                        long long bound = -slack >= 0 ? (-slack + cc - 1) / cc : -((slack) / cc);
                        if (bound > lo[j]) {
                            lo[j] = bound;
                            changed = true;
                        }
                    }
                    if (lo[j] > hi[j]) return false;
                }
            }
        }
        return true;
    }

    bool solve(std::vector<long long> lo, std::vector<long long> hi,
               std::vector<long long>& out) {
        if (++nodes > nodeCap)
            throw Refusal("ilp_feasible: node cap " + std::to_string(nodeCap) + " exceeded");
        if (!propagate(lo, hi)) return false;
        int pick = -1;
        for (int j = 0; j < n; ++j)
            if (lo[j] < hi[j] && (pick < 0 || hi[j] - lo[j] < hi[pick] - lo[pick])) pick = j;
        if (pick < 0) {
            out.assign(lo.begin(), lo.end());
            return true;
        }
        for (long long v = lo[pick]; v <= hi[pick]; ++v) {
            auto lo2 = lo, hi2 = hi;
            lo2[pick] = hi2[pick] = v;
            if (solve(std::move(lo2), std::move(hi2), out)) return true;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<long long>> ilp_feasible(const LinearSystem& sys, const Limits& lim) {
    int n = sys.num_vars();
    if (static_cast<int>(sys.upper.size()) != n)
        throw ContractError("ilp_feasible: lower/upper size mismatch");
    for (int j = 0; j < n; ++j) {
        if (sys.lower[j] > sys.upper[j]) return std::nullopt;
        if (std::llabs(sys.lower[j]) > kMagnitudeCap || std::llabs(sys.upper[j]) > kMagnitudeCap)
            throw ContractError("ilp_feasible: variable bound magnitude too large");
    }

    Search s;
    s.n = n;
    s.nodeCap = lim.ilp_node_cap;
    auto addRow = [&](const LinearConstraint& c, bool negate) {
        Row r;
        for (int j = 0; j < n; ++j) {
            long long cf = c.coeffs[j];
            if (std::llabs(cf) > kMagnitudeCap)
                throw ContractError("ilp_feasible: coefficient magnitude too large");
            if (cf != 0) r.terms.emplace_back(j, negate ? -cf : cf);
        }
        r.rhs = negate ? -c.rhs : c.rhs;
        s.rows.push_back(std::move(r));
    };
    for (const auto& c : sys.cons) {
        if (static_cast<int>(c.coeffs.size()) != n)
            throw ContractError("ilp_feasible: constraint arity mismatch");
        if (c.rel == Rel::LessEq || c.rel == Rel::Eq) addRow(c, false);
        if (c.rel == Rel::GreaterEq || c.rel == Rel::Eq) addRow(c, true);
    }

    std::vector<long long> out;
    if (s.solve(sys.lower, sys.upper, out)) return out;
    return std::nullopt;
}

} // namespace spanlab
