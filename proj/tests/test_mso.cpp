#include "doctest.h"

#include <string>

#include "spanlab/bench.hpp"
#include "spanlab/exact.hpp"
#include "spanlab/mso.hpp"

#include "oracles.hpp"

using namespace spanlab;

TEST_CASE("emit_dist2 golden text") {
    CHECK(emit_dist2() ==
          "(and (neq u w) (not (adj u w)) (exists-vertex v (and (adj u v) (adj v w))))");
}

TEST_CASE("naive_check_pair decides distance exactly 2") {
    Graph p3 = oracles::path_graph(3);
    CHECK(naive_check_pair(p3, emit_dist2(), 0, 2));
    CHECK(naive_check_pair(p3, emit_dist2(), 2, 0));
    CHECK_FALSE(naive_check_pair(p3, emit_dist2(), 0, 1));
    CHECK_FALSE(naive_check_pair(p3, emit_dist2(), 0, 0));

    Graph k3 = oracles::complete_graph(3);
    for (int u = 0; u < 3; ++u)
        for (int w = 0; w < 3; ++w) CHECK_FALSE(naive_check_pair(k3, emit_dist2(), u, w));

    Rng rng(101);
    for (int i = 0; i < 15; ++i) {
        Graph g = random_graph(rng, 1 + static_cast<int>(rng.next(6)));
        auto pairs = distance2_pairs(g);
        for (int u = 0; u < g.n; ++u)
            for (int w = u + 1; w < g.n; ++w) {
                bool expect = std::binary_search(pairs.begin(), pairs.end(), std::pair{u, w});
                CHECK(naive_check_pair(g, emit_dist2(), u, w) == expect);
            }
    }
}

TEST_CASE("emit_phi sanity on an edge") {
    // K_2 under L(2,1) is satisfiable exactly from span 2 on.
    Graph k2 = oracles::path_graph(2);
    CHECK_FALSE(naive_model_check(k2, emit_phi(0, {2, 1})));
    CHECK_FALSE(naive_model_check(k2, emit_phi(1, {2, 1})));
    CHECK(naive_model_check(k2, emit_phi(2, {2, 1})));
    CHECK(naive_model_check(k2, emit_phi(3, {2, 1})));
}

TEST_CASE("emit_phi frozen path answers") {
    Graph p3 = oracles::path_graph(3);
    CHECK(naive_model_check(p3, emit_phi(3, {2, 1})));
    CHECK_FALSE(naive_model_check(p3, emit_phi(2, {2, 1})));
    CHECK(naive_model_check(new_graph(1, {}), emit_phi(0, {2, 1})));
}

TEST_CASE("model checking agrees with decide_exact") {
    Rng rng(102);
    for (int i = 0; i < 10; ++i) {
        Graph g = random_connected_graph(rng, 1 + static_cast<int>(rng.next(5)));
        for (auto [p, q] : {std::pair{1, 1}, {2, 1}}) {
            for (int k = 0; k <= 5; ++k) {
                bool sat = decide_exact(g, {p, q}, k).has_value();
                CHECK(naive_model_check(g, emit_phi(k, {p, q})) == sat);
            }
        }
    }
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(parse_formula("(frobnicate u w)"), ContractError);
    CHECK_THROWS_AS(parse_formula("(adj u)"), ContractError);
    CHECK_THROWS_AS(parse_formula("(not)"), ContractError);
    CHECK_THROWS_AS(parse_formula("(adj u w) trailing"), ContractError);
    CHECK_THROWS_AS(parse_formula("(and (adj u w)"), ContractError);
    CHECK_THROWS_AS(parse_formula(""), ContractError);
    CHECK_NOTHROW(parse_formula("(and)"));
    CHECK_NOTHROW(parse_formula("(or)"));
}

TEST_CASE("n-ary and/or semantics") {
    // (and) is true and (or) is false on any graph and any binding.
    Graph k1 = new_graph(1, {});
    CHECK(naive_check_pair(k1, "(and)", 0, 0));
    CHECK_FALSE(naive_check_pair(k1, "(or)", 0, 0));
    CHECK(naive_check_pair(k1, "(or (and) (or))", 0, 0));
}

TEST_CASE("model checker refusals") {
    CHECK_THROWS_AS(naive_model_check(oracles::path_graph(9), emit_phi(1, {1, 1})), Refusal);
    CHECK_THROWS_AS(naive_model_check(oracles::path_graph(3), emit_phi(7, {1, 1})), Refusal);
    CHECK_NOTHROW(naive_model_check(oracles::path_graph(3), emit_phi(6, {1, 1})));
}
