#include "doctest.h"

#include "spanlab/bench.hpp"
#include "spanlab/ilp.hpp"

using namespace spanlab;

namespace {

bool satisfies(const LinearSystem& sys, const std::vector<long long>& x) {
    for (int i = 0; i < sys.num_vars(); ++i)
        if (x[i] < sys.lower[i] || x[i] > sys.upper[i]) return false;
    for (const auto& c : sys.cons) {
        long long lhs = 0;
        for (int i = 0; i < sys.num_vars(); ++i) lhs += c.coeffs[i] * x[i];
        if (c.rel == Rel::LessEq && lhs > c.rhs) return false;
        if (c.rel == Rel::Eq && lhs != c.rhs) return false;
        if (c.rel == Rel::GreaterEq && lhs < c.rhs) return false;
    }
    return true;
}

bool brute_feasible(const LinearSystem& sys) {
    std::vector<long long> x(sys.num_vars());
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == sys.num_vars()) return satisfies(sys, x);
        for (long long v = sys.lower[i]; v <= sys.upper[i]; ++v) {
            x[i] = v;
            if (self(self, i + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

} // namespace

TEST_CASE("small systems") {
    LinearSystem sys;
    sys.lower = {0, 0};
    sys.upper = {3, 3};
    sys.cons.push_back({{1, 1}, Rel::Eq, 3});
    auto x = ilp_feasible(sys);
    REQUIRE(x.has_value());
    CHECK(satisfies(sys, *x));
    CHECK((*x)[0] + (*x)[1] == 3);

    LinearSystem bad;
    bad.lower = {0};
    bad.upper = {5};
    bad.cons.push_back({{1}, Rel::GreaterEq, 2});
    bad.cons.push_back({{1}, Rel::LessEq, 1});
    CHECK_FALSE(ilp_feasible(bad).has_value());
}

TEST_CASE("the counting instance with two unit types") {
    // Systems C_0 (empty), C_1 = {T_1}, C_2 = {T_2} with |T_1| = |T_2| = 2
    // and k = 3: x_1 = x_2 = 2 and the total fits in k+1 = 4 only with x_0=0.
    LinearSystem sys;
    sys.lower = {0, 0, 0};
    sys.upper = {4, 2, 2};
    sys.cons.push_back({{1, 1, 1}, Rel::LessEq, 4});
    sys.cons.push_back({{0, 1, 0}, Rel::Eq, 2});
    sys.cons.push_back({{0, 0, 1}, Rel::Eq, 2});
    auto x = ilp_feasible(sys);
    REQUIRE(x.has_value());
    CHECK(*x == std::vector<long long>{0, 2, 2});
}

TEST_CASE("malformed systems are rejected") {
    LinearSystem sys;
    sys.lower = {0, 0};
    sys.upper = {3}; // bound count mismatch
    CHECK_THROWS_AS(ilp_feasible(sys), ContractError);

    LinearSystem wide;
    wide.lower = {0};
    wide.upper = {3};
    wide.cons.push_back({{1, 1}, Rel::LessEq, 2}); // coefficient count mismatch
    CHECK_THROWS_AS(ilp_feasible(wide), ContractError);

    LinearSystem crossed;
    crossed.lower = {2};
    crossed.upper = {1}; // empty domain: infeasible, not an error
    CHECK_FALSE(ilp_feasible(crossed).has_value());
}

TEST_CASE("agreement with exhaustive enumeration") {
    Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        int vars = 1 + static_cast<int>(rng.next(4));
        LinearSystem sys;
        for (int i = 0; i < vars; ++i) {
            long long lo = static_cast<long long>(rng.next(4));
            long long hi = lo + static_cast<long long>(rng.next(12));
            sys.lower.push_back(lo);
            sys.upper.push_back(std::min<long long>(hi, 15));
        }
        int numCons = 1 + static_cast<int>(rng.next(3));
        for (int c = 0; c < numCons; ++c) {
            LinearConstraint con;
            for (int i = 0; i < vars; ++i)
                con.coeffs.push_back(static_cast<long long>(rng.next(7)) - 3);
            con.rel = static_cast<Rel>(rng.next(3));
            con.rhs = static_cast<long long>(rng.next(41)) - 10;
            sys.cons.push_back(con);
        }
        auto x = ilp_feasible(sys);
        CHECK(x.has_value() == brute_feasible(sys));
        if (x) CHECK(satisfies(sys, *x));
    }
}

TEST_CASE("node cap refusal") {
    // An even sum can never hit an odd target, but interval propagation only
    // sees bounds, so the search keeps branching until the cap trips.
    LinearSystem sys;
    sys.lower = {0, 0, 0};
    sys.upper = {100000, 100000, 100000};
    sys.cons.push_back({{2, 2, 2}, Rel::Eq, 300001});
    Limits tight;
    tight.ilp_node_cap = 500;
    CHECK_THROWS_AS(ilp_feasible(sys, tight), Refusal);
}
