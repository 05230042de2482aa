#include "doctest.h"

#include <string>

#include "spanlab/bench.hpp"
#include "spanlab/dp.hpp"
#include "spanlab/exact.hpp"

#include "oracles.hpp"

using namespace spanlab;

TEST_CASE("decide_dp agrees with the enumeration oracle") {
    Rng rng(71);
    for (int i = 0; i < 25; ++i) {
        Graph g = random_connected_graph(rng, 2 + static_cast<int>(rng.next(6)));
        for (auto [p, q] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
            for (int k = 0; k <= 8; ++k) {
                auto mine = decide_dp(g, {p, q}, k);
                auto ref = oracles::feasible(g, p, q, k);
                REQUIRE(mine.has_value() == ref.has_value());
                if (mine) {
                    CHECK(oracles::valid_labeling(g, *mine, p, q));
                    CHECK(max_label(*mine) <= k);
                }
            }
        }
    }
}

TEST_CASE("lambda_dp matches known values") {
    CHECK(lambda_dp(oracles::path_graph(2), {2, 1}).first == 2);
    CHECK(lambda_dp(oracles::path_graph(5), {2, 1}).first == 4);
    CHECK(lambda_dp(oracles::cycle_graph(5), {2, 1}).first == 4);
    CHECK(lambda_dp(oracles::complete_graph(5), {2, 1}).first == 8);
    CHECK(lambda_dp(oracles::star_graph(4), {2, 1}).first == 5);
    CHECK(lambda_dp(new_graph(1, {}), {2, 1}).first == 0);
    CHECK(lambda_dp(oracles::path_graph(4), {1, 1}).first == 2);
}

TEST_CASE("lambda_dp agrees with lambda_exact on random graphs") {
    Rng rng(72);
    for (int i = 0; i < 20; ++i) {
        Graph g = random_connected_graph(rng, 1 + static_cast<int>(rng.next(7)));
        for (auto [p, q] : {std::pair{2, 1}, {2, 2}, {1, 2}}) {
            auto [l, f] = lambda_dp(g, {p, q});
            CHECK(l == lambda_exact(g, {p, q}).first);
            CHECK(oracles::valid_labeling(g, f, p, q));
            CHECK(max_label(f) == l);
        }
    }
}

TEST_CASE("a supplied decomposition gives the same answers") {
    Rng rng(73);
    for (int i = 0; i < 10; ++i) {
        Graph g = random_connected_graph(rng, 2 + static_cast<int>(rng.next(6)));
        auto viaHeuristic = heuristic_td(g);
        auto viaExact = exact_td(g);
        PqParams pq{2, 1};
        int want = lambda_exact(g, pq).first;
        CHECK(lambda_dp(g, pq, default_limits(), &viaHeuristic).first == want);
        CHECK(lambda_dp(g, pq, default_limits(), &viaExact).first == want);
        auto dec = decide_dp(g, pq, want, default_limits(), &viaHeuristic);
        REQUIRE(dec.has_value());
        CHECK(oracles::valid_labeling(g, *dec, pq.p, pq.q));
        if (want > 0)
            CHECK_FALSE(decide_dp(g, pq, want - 1, default_limits(), &viaExact).has_value());
    }
}

TEST_CASE("state budget refusal names the escape hatch") {
    Limits tiny;
    tiny.dp_state_budget = 10;
    try {
        decide_dp(oracles::cycle_graph(5), {2, 1}, 4, tiny);
        FAIL("expected a refusal");
    } catch (const Refusal& r) {
        CHECK(std::string(r.what()).find("SPANLAB_STATE_BUDGET") != std::string::npos);
    }
}

TEST_CASE("contract violations") {
    CHECK_THROWS_AS(decide_dp(oracles::path_graph(3), {0, 1}, 3), ContractError);
    CHECK_THROWS_AS(decide_dp(oracles::path_graph(3), {2, 1}, -1), ContractError);
    CHECK_THROWS_AS(decide_dp(new_graph(3, {{0, 1}}), {2, 1}, 5), DisconnectedError);
    CHECK_THROWS_AS(lambda_dp(new_graph(2, {}), {1, 1}), DisconnectedError);
}
