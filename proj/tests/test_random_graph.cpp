#include <doctest.h>

#include <stdexcept>

#include "gat/errors.hpp"
#include "gat/graph.hpp"
#include "gat/random_graph.hpp"

using namespace gat;

TEST_CASE("p = 1 forces the complete graph") {
    const Graph g = random_connected(5, 1.0, 123u);
    CHECK(g.edge_count() == 10);
}

TEST_CASE("fixed seed reproduces the sample") {
    const Graph a = random_connected(10, 0.5, 42u);
    const Graph b = random_connected(10, 0.5, 42u);
    CHECK(a.edges() == b.edges());
}

TEST_CASE("seeds actually vary the sample") {
    const Graph a = random_connected(10, 0.5, 1u);
    const Graph b = random_connected(10, 0.5, 2u);
    CHECK(a.edges() != b.edges());
}

TEST_CASE("samples are connected") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        CHECK(is_connected(random_connected(12, 0.25, seed)));
    }
}

TEST_CASE("hopeless p exhausts the retry budget") {
    CHECK_THROWS_AS(random_connected(10, 0.001, 0u), SamplingError);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(random_connected(1, 0.5, 0u), std::invalid_argument);
    CHECK_THROWS_AS(random_connected(5, 0.0, 0u), std::invalid_argument);
    CHECK_THROWS_AS(random_connected(5, 1.5, 0u), std::invalid_argument);
    CHECK_THROWS_AS(random_connected(5, -0.1, 0u), std::invalid_argument);
}
