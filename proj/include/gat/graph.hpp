#pragma once

#include <utility>
#include <vector>

namespace gat {

using Edge = std::pair<int, int>;  // stored normalized, first < second

// Immutable simple undirected graph on vertices 0..n-1. Self-loops and
// duplicate edges are rejected at construction. Disconnected graphs are
// allowed; operations that require connectivity enforce it themselves.
class Graph {
public:
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Sorted lexicographically, each pair normalized u < v.
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<int>& degrees() const { return degrees_; }
    int degree(int v) const { return degrees_[static_cast<size_t>(v)]; }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    bool has_edge(int u, int v) const;

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<int> degrees_;
    std::vector<std::vector<int>> adj_;
};

struct DegreeStats {
    int n = 0;
    int m = 0;
    std::vector<int> degrees;
    int delta = 0;   // minimum degree
    int Delta = 0;   // maximum degree
    bool is_regular = false;
    bool edge_product_constant = false;  // d_u * d_v equal across all edges
};

DegreeStats degree_stats(const Graph& g);

// True iff every vertex is reachable from vertex 0; a single vertex counts
// as connected.
bool is_connected(const Graph& g);

}  // namespace gat
