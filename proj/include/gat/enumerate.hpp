#pragma once

#include <functional>
#include <vector>

#include "gat/graph.hpp"

namespace gat {

// Yields exactly one representative per isomorphism class of connected
// simple graphs on n vertices, 1 <= n <= 7. Class counts per n follow
// 1, 1, 2, 6, 21, 112, 853.
void enumerate_connected(int n, const std::function<void(const Graph&)>& yield);

std::vector<Graph> enumerate_connected(int n);

}  // namespace gat
