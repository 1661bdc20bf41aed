#include "gat/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gat {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ <= 0) {
        throw std::invalid_argument("graph must have at least one vertex");
    }
    for (auto& [u, v] : edges_) {
        if (u == v) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        }
        if (u < 0 || v < 0 || u >= n_ || v >= n_) {
            throw std::invalid_argument("vertex index out of range: (" + std::to_string(u) +
                                        ", " + std::to_string(v) + ")");
        }
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw std::invalid_argument("duplicate edge");
    }

    degrees_.assign(static_cast<size_t>(n_), 0);
    adj_.assign(static_cast<size_t>(n_), {});
    for (const auto& [u, v] : edges_) {
        ++degrees_[static_cast<size_t>(u)];
        ++degrees_[static_cast<size_t>(v)];
        adj_[static_cast<size_t>(u)].push_back(v);
        adj_[static_cast<size_t>(v)].push_back(u);
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats s;
    s.n = g.vertex_count();
    s.m = g.edge_count();
    s.degrees = g.degrees();
    s.delta = *std::min_element(s.degrees.begin(), s.degrees.end());
    s.Delta = *std::max_element(s.degrees.begin(), s.degrees.end());
    s.is_regular = (s.delta == s.Delta);

    s.edge_product_constant = true;
    if (s.m > 0) {
        const auto& first = g.edges().front();
        const long long p0 = static_cast<long long>(s.degrees[static_cast<size_t>(first.first)]) *
                             s.degrees[static_cast<size_t>(first.second)];
        for (const auto& [u, v] : g.edges()) {
            const long long p = static_cast<long long>(s.degrees[static_cast<size_t>(u)]) *
                                s.degrees[static_cast<size_t>(v)];
            if (p != p0) {
                s.edge_product_constant = false;
                break;
            }
        }
    }
    return s;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

}  // namespace gat
