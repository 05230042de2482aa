#include "doctest.h"

#include "spanlab/bench.hpp"
#include "spanlab/exact.hpp"

#include "oracles.hpp"

using namespace spanlab;

TEST_CASE("known L(2,1) spans") {
    CHECK(lambda_exact(oracles::path_graph(2), {2, 1}).first == 2);
    CHECK(lambda_exact(oracles::path_graph(3), {2, 1}).first == 3);
    CHECK(lambda_exact(oracles::path_graph(5), {2, 1}).first == 4);
    CHECK(lambda_exact(oracles::cycle_graph(5), {2, 1}).first == 4);
    CHECK(lambda_exact(oracles::complete_graph(5), {2, 1}).first == 8);
    CHECK(lambda_exact(oracles::star_graph(4), {2, 1}).first == 5);
    CHECK(lambda_exact(new_graph(1, {}), {2, 1}).first == 0);
}

TEST_CASE("decide_exact matches the enumeration oracle") {
    Rng rng(31);
    for (int i = 0; i < 25; ++i) {
        Graph g = random_connected_graph(rng, 1 + static_cast<int>(rng.next(6)));
        for (auto [p, q] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
            for (int k = 0; k <= 8; ++k) {
                auto mine = decide_exact(g, {p, q}, k);
                auto ref = oracles::feasible(g, p, q, k);
                CHECK(mine.has_value() == ref.has_value());
                if (mine) CHECK(oracles::valid_labeling(g, *mine, p, q));
                if (mine) CHECK(max_label(*mine) <= k);
            }
        }
    }
}

TEST_CASE("lambda_exact equals the oracle lambda") {
    Rng rng(32);
    for (int i = 0; i < 30; ++i) {
        Graph g = random_connected_graph(rng, 1 + static_cast<int>(rng.next(6)));
        for (auto [p, q] : {std::pair{1, 1}, {2, 1}, {3, 1}, {2, 2}, {1, 2}}) {
            auto [l, f] = lambda_exact(g, {p, q});
            CHECK(l == oracles::lambda(g, p, q));
            CHECK(oracles::valid_labeling(g, f, p, q));
            CHECK(max_label(f) == l);
        }
    }
}

TEST_CASE("feasibility is monotone in k") {
    Rng rng(33);
    for (int i = 0; i < 10; ++i) {
        Graph g = random_connected_graph(rng, 2 + static_cast<int>(rng.next(5)));
        auto [l, f] = lambda_exact(g, {2, 1});
        CHECK_FALSE(decide_exact(g, {2, 1}, l - 1).has_value());
        CHECK(decide_exact(g, {2, 1}, l + 1).has_value());
    }
}

TEST_CASE("scaling identity at small scale") {
    Rng rng(34);
    for (int i = 0; i < 15; ++i) {
        Graph g = random_connected_graph(rng, 2 + static_cast<int>(rng.next(5)));
        int l11 = lambda_exact(g, {1, 1}).first;
        CHECK(lambda_exact(g, {2, 2}).first == 2 * l11);
        CHECK(lambda_exact(g, {3, 3}).first == 3 * l11);
    }
}

TEST_CASE("contract errors and refusals") {
    CHECK_THROWS_AS(lambda_exact(new_graph(4, {{0, 1}, {2, 3}}), {2, 1}),
                    DisconnectedError);
    CHECK_THROWS_AS(decide_exact(oracles::path_graph(3), {0, 1}, 4), ContractError);
    CHECK_THROWS_AS(decide_exact(oracles::path_graph(3), {2, 1}, -1), ContractError);
    Limits tight;
    tight.exact_max_n = 4;
    CHECK_THROWS_AS(decide_exact(oracles::path_graph(5), {2, 1}, 6, tight), Refusal);
}
