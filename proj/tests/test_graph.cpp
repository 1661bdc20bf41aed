#include <doctest.h>

#include <stdexcept>

#include "gat/graph.hpp"
#include "gat/random_graph.hpp"
#include "oracles.hpp"

using namespace gat;
using namespace gat::testing;

TEST_CASE("degree_stats on hand graphs") {
    SUBCASE("path P3") {
        const DegreeStats s = degree_stats(path_graph(3));
        CHECK(s.degrees == std::vector<int>{1, 2, 1});
        CHECK(s.delta == 1);
        CHECK(s.Delta == 2);
        CHECK(s.m == 2);
        CHECK_FALSE(s.is_regular);
    }
    SUBCASE("complete K4") {
        const DegreeStats s = degree_stats(complete_graph(4));
        CHECK(s.degrees == std::vector<int>{3, 3, 3, 3});
        CHECK(s.is_regular);
        CHECK(s.m == 6);
        CHECK(s.edge_product_constant);
    }
    SUBCASE("star K_{1,3}") {
        const DegreeStats s = degree_stats(star_graph(3));
        CHECK(s.degrees == std::vector<int>{3, 1, 1, 1});
        CHECK(s.edge_product_constant);  // every edge product is 3
        CHECK_FALSE(s.is_regular);
    }
    SUBCASE("path P4 has non-constant edge products") {
        CHECK_FALSE(degree_stats(path_graph(4)).edge_product_constant);
    }
    SUBCASE("complete bipartite graphs have constant edge products") {
        for (int a = 1; a <= 4; ++a)
            for (int b = a; b <= 4; ++b) CHECK(degree_stats(complete_bipartite(a, b)).edge_product_constant);
    }
    SUBCASE("single vertex") {
        const DegreeStats s = degree_stats(Graph(1, {}));
        CHECK(s.delta == 0);
        CHECK(s.is_regular);
        CHECK(s.edge_product_constant);
    }
}

TEST_CASE("handshake and degree bounds on random graphs") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = random_connected(9, 0.4, seed);
        const DegreeStats s = degree_stats(g);
        long long total = 0;
        for (int d : s.degrees) total += d;
        CHECK(total == 2LL * s.m);
        CHECK(0 <= s.delta);
        CHECK(s.delta <= s.Delta);
        CHECK(s.Delta <= s.n - 1);
    }
}

TEST_CASE("is_connected") {
    CHECK(is_connected(path_graph(3)));
    CHECK(is_connected(Graph(1, {})));
    CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
    CHECK_FALSE(is_connected(Graph(2, {})));
    CHECK(is_connected(disjoint_union(complete_graph(2), complete_graph(2))) == false);
}

TEST_CASE("graph construction rejects invalid input") {
    CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{-1, 1}}), std::invalid_argument);
}

TEST_CASE("edges are normalized and queryable") {
    const Graph g(3, {{2, 0}, {1, 2}});
    CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
    CHECK(g.has_edge(2, 0));
    CHECK(g.has_edge(0, 2));
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK(g.degree(2) == 2);
}
