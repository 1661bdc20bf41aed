#include "gat/random_graph.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "gat/errors.hpp"

namespace gat {

namespace {

constexpr int kMaxAttempts = 1000;

// std::bernoulli_distribution is implementation-defined; draw uniforms in
// [0,1) directly from the engine's raw output to stay reproducible across
// standard libraries.
double next_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Graph random_connected(int n, double p, uint64_t seed) {
    if (n < 2) throw std::invalid_argument("random_connected requires n >= 2");
    if (!(p > 0.0) || p > 1.0) {
        throw std::invalid_argument("edge probability must be in (0, 1]");
    }

    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<Edge> edges;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                if (next_uniform(rng) < p) edges.push_back({u, v});
        Graph g(n, std::move(edges));
        if (is_connected(g)) return g;
    }
    throw SamplingError("no connected G(" + std::to_string(n) + ", p) sample in " +
                        std::to_string(kMaxAttempts) + " attempts; p is likely too small");
}

}  // namespace gat
