#pragma once

#include <cstdint>

#include "gat/graph.hpp"

namespace gat {

// Erdos-Renyi G(n, p) sample, redrawn until connected (at most 1000
// attempts, then SamplingError). Identical (n, p, seed) triples produce
// identical graphs on every platform.
Graph random_connected(int n, double p, uint64_t seed);

}  // namespace gat
